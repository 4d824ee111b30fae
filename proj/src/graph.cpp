#include "immune/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace immune {

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == n;
}

Graph build_graph(int n, const std::vector<Edge>& edges_in) {
  if (n < 0) fail(errc::vertex_out_of_range, "negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges_in) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::vertex_out_of_range,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) fail(errc::self_loop, "self-loop at vertex " + std::to_string(u));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (int u = 0; u < n; ++u) {
    auto& a = g.adj[u];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      fail(errc::duplicate_edge, "duplicate edge at vertex " + std::to_string(u));
  }
  g.m = static_cast<int>(edges_in.size());
  return g;
}

RootedTree root_tree(const Graph& g, int root) {
  if (root < 0 || root >= g.n) fail(errc::vertex_out_of_range, "root out of range");
  if (g.m != g.n - 1 || !g.is_connected())
    fail(errc::not_a_tree, "graph is not a tree (need connected with m = n-1)");

  RootedTree t;
  t.base = g;
  t.root = root;
  t.parent.assign(g.n, -1);
  t.children.assign(g.n, {});
  t.postorder.clear();
  t.postorder.reserve(g.n);

  // Iterative DFS emitting children in sorted (adjacency) order.
  std::vector<char> seen(g.n, 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, next-child index)
  stack.reserve(g.n);
  seen[root] = 1;
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [u, idx] = stack.back();
    bool descended = false;
    while (idx < static_cast<int>(g.adj[u].size())) {
      int v = g.adj[u][idx++];
      if (seen[v]) continue;
      seen[v] = 1;
      t.parent[v] = u;
      t.children[u].push_back(v);
      stack.emplace_back(v, 0);
      descended = true;
      break;
    }
    if (!descended && idx >= static_cast<int>(g.adj[u].size())) {
      t.postorder.push_back(u);
      stack.pop_back();
    }
  }
  return t;
}

RootedTree attach_capacities(RootedTree t, const VertexFn& iota_max) {
  check_fn_size(iota_max, t.n(), "attach_capacities");
  for (int u = 0; u < t.n(); ++u)
    if (iota_max[u] < 0)
      fail(errc::negative_capacity, "iota_max(" + std::to_string(u) + ") is negative");
  t.subtree_capacity.assign(t.n(), 0);
  for (int u : t.postorder) {
    std::int64_t cap = iota_max[u];
    for (int v : t.children[u]) cap += t.subtree_capacity[v];
    t.subtree_capacity[u] = cap;
  }
  return t;
}

VertexFn constant_fn(int n, int c) { return VertexFn(n, c); }

VertexFn degree_fn(const Graph& g) {
  VertexFn d(g.n);
  for (int u = 0; u < g.n; ++u) d[u] = g.degree(u);
  return d;
}

std::int64_t fn_sum(const VertexFn& f) {
  return std::accumulate(f.begin(), f.end(), std::int64_t{0});
}

} // namespace immune
