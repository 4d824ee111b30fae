#include "immune/spread.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace immune {

VertexSet compute_hull(const Graph& g, const VertexFn& tau, const VertexSet& seed) {
  check_fn_size(tau, g.n, "compute_hull");
  if (seed.universe_size() != g.n) fail(errc::size_mismatch, "compute_hull: seed universe mismatch");

  std::vector<char> active(g.n, 0);
  std::vector<int> cnt(g.n, 0);
  std::vector<int> queue;
  queue.reserve(g.n);

  for (int v : seed.members()) {
    active[v] = 1;
    queue.push_back(v);
  }
  for (int v = 0; v < g.n; ++v) {
    if (!active[v] && tau[v] <= 0) {
      active[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : g.adj[u]) {
      if (active[v]) continue;
      if (++cnt[v] >= tau[v]) {
        active[v] = 1;
        queue.push_back(v);
      }
    }
  }

  VertexSet hull(g.n);
  for (int v = 0; v < g.n; ++v)
    if (active[v]) hull.insert(v);
  return hull;
}

bool is_dynamic_monopoly(const Graph& g, const VertexFn& tau, const VertexSet& seed) {
  return compute_hull(g, tau, seed).size() == g.n;
}

namespace {

// Fixpoint spread over adjacency bitmasks; independent of the worklist
// propagation in compute_hull.
bool spreads_to_all(const std::vector<std::uint64_t>& adj_mask, const VertexFn& tau,
                    std::uint64_t seed, int n) {
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::uint64_t act = seed;
  for (int v = 0; v < n; ++v)
    if (tau[v] <= 0) act |= std::uint64_t{1} << v;
  bool changed = true;
  while (changed && act != all) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (act & bit) continue;
      if (std::popcount(adj_mask[v] & act) >= tau[v]) {
        act |= bit;
        changed = true;
      }
    }
  }
  return act == all;
}

} // namespace

VertexSet min_monopoly(const Graph& g, const VertexFn& tau, int size_limit) {
  check_fn_size(tau, g.n, "min_monopoly");
  if (g.n > size_limit || g.n > 62)
    fail(errc::instance_too_large,
         "min_monopoly: n=" + std::to_string(g.n) + " exceeds limit " + std::to_string(size_limit));

  std::vector<std::uint64_t> adj_mask(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) adj_mask[u] |= std::uint64_t{1} << v;

  std::uint64_t forced = 0;
  std::vector<int> free_vertices;
  for (int u = 0; u < g.n; ++u) {
    if (tau[u] > g.degree(u))
      forced |= std::uint64_t{1} << u;
    else
      free_vertices.push_back(u);
  }

  auto as_set = [&](std::uint64_t mask) {
    VertexSet s(g.n);
    for (int v = 0; v < g.n; ++v)
      if (mask & (std::uint64_t{1} << v)) s.insert(v);
    return s;
  };

  const int r = static_cast<int>(free_vertices.size());
  for (int k = 0; k <= r; ++k) {
    if (k == 0) {
      if (spreads_to_all(adj_mask, tau, forced, g.n)) return as_set(forced);
      continue;
    }
    // Gosper's hack: masks over the free vertex list, ascending within
    // fixed popcount, i.e. combinations in sorted-index order.
    std::uint64_t comb = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << r;
    while (comb < limit) {
      std::uint64_t seed = forced;
      std::uint64_t rest = comb;
      while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        seed |= std::uint64_t{1} << free_vertices[i];
      }
      if (spreads_to_all(adj_mask, tau, seed, g.n)) return as_set(seed);
      std::uint64_t c = comb & -comb;
      std::uint64_t rr = comb + c;
      comb = (((rr ^ comb) >> 2) / c) | rr;
    }
  }
  return VertexSet::full(g.n);  // unreachable: seeding everything always works
}

int dyn_bruteforce(const Graph& g, const VertexFn& tau, int size_limit) {
  return min_monopoly(g, tau, size_limit).size();
}

Rational ackerman_bound(const Graph& g, const VertexFn& tau) {
  check_fn_size(tau, g.n, "ackerman_bound");
  Rational sum(0);
  for (int u = 0; u < g.n; ++u) {
    if (tau[u] < 0 || tau[u] > g.degree(u))
      fail(errc::threshold_out_of_range,
           "ackerman_bound requires 0 <= tau(u) <= deg(u); violated at vertex " + std::to_string(u));
    sum += Rational(tau[u], g.degree(u) + 1);
  }
  return sum;
}

} // namespace immune
