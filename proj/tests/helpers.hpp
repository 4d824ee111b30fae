#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "immune/gen.hpp"
#include "immune/graph.hpp"
#include "immune/spread.hpp"

namespace immune::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline VertexFn random_fn(Rng& rng, int n, int lo, int hi) {
  VertexFn f(n);
  for (auto& x : f) x = rand_int(rng, lo, hi);
  return f;
}

inline VertexFn add_fns(const VertexFn& a, const VertexFn& b) {
  VertexFn out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Graph random_tree_graph(Rng& rng, int n) { return random_tree(n, rng()); }

inline Graph random_connected_graph(Rng& rng, int n, int percent_extra) {
  const std::vector<Edge> tree = random_tree(n, rng()).edges();
  std::vector<Edge> edges = tree;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (std::binary_search(tree.begin(), tree.end(), Edge{u, v})) continue;
      if (rand_int(rng, 0, 99) < percent_extra) edges.emplace_back(u, v);
    }
  return build_graph(n, edges);
}

inline VertexSet random_subset(Rng& rng, int n, int percent) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (rand_int(rng, 0, 99) < percent) s.insert(v);
  return s;
}

/// Reference hull: activate one random eligible vertex at a time until no
/// vertex qualifies. Shares no code with compute_hull.
inline VertexSet hull_randomized(Rng& rng, const Graph& g, const VertexFn& tau,
                                 const VertexSet& seed) {
  std::vector<char> active(g.n, 0);
  for (int v : seed.members()) active[v] = 1;
  for (;;) {
    std::vector<int> eligible;
    for (int u = 0; u < g.n; ++u) {
      if (active[u]) continue;
      int hot = 0;
      for (int v : g.adj[u]) hot += active[v];
      if (hot >= tau[u]) eligible.push_back(u);
    }
    if (eligible.empty()) break;
    active[eligible[rng() % eligible.size()]] = 1;
  }
  VertexSet out(g.n);
  for (int v = 0; v < g.n; ++v)
    if (active[v]) out.insert(v);
  return out;
}

/// Labeled tree from a Pruefer sequence (n >= 2, sequence length n-2);
/// iterating all sequences enumerates all labeled trees exactly once.
inline Graph prufer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::vector<Edge> edges;
  std::vector<char> done(n, 0);
  for (int s : seq) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && deg[v] == 1) {
        leaf = v;
        break;
      }
    edges.emplace_back(leaf, s);
    done[leaf] = 1;
    --deg[s];
  }
  std::vector<int> rem;
  for (int v = 0; v < n; ++v)
    if (!done[v]) rem.push_back(v);
  edges.emplace_back(rem[0], rem[1]);
  return build_graph(n, edges);
}

/// All functions V -> {values} via callback.
inline void for_all_fns(int n, const std::vector<int>& values,
                        const std::function<void(const VertexFn&)>& fn) {
  VertexFn cur(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      VertexFn f(n);
      for (int j = 0; j < n; ++j) f[j] = values[cur[j]];
      fn(f);
      return;
    }
    for (int k = 0; k < static_cast<int>(values.size()); ++k) {
      cur[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
}

} // namespace immune::testing
