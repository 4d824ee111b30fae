#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "immune/error.hpp"

namespace immune {

/// Integer-valued vertex function (thresholds, increments, capacities).
/// Indexed by vertex; length must equal the vertex count of its graph.
using VertexFn = std::vector<int>;

using Edge = std::pair<int, int>;

/// Simple undirected graph with sorted adjacency lists.
struct Graph {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> adj;

  int degree(int u) const { return static_cast<int>(adj[u].size()); }
  bool has_edge(int u, int v) const;
  /// Edges as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  bool is_connected() const;
};

/// Tree with a fixed root, parent/children structure and a postorder
/// traversal (every child precedes its parent). subtree_capacity is
/// empty until attach_capacities() fills it.
struct RootedTree {
  Graph base;
  int root = 0;
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // sorted ascending
  std::vector<int> postorder;
  std::vector<std::int64_t> subtree_capacity;

  int n() const { return base.n; }
};

Graph build_graph(int n, const std::vector<Edge>& edges_in);

RootedTree root_tree(const Graph& g, int root);

/// Returns a copy of t with subtree_capacity(u) = sum of iota_max over the
/// subtree of u, computed in one postorder pass.
RootedTree attach_capacities(RootedTree t, const VertexFn& iota_max);

VertexFn constant_fn(int n, int c);
VertexFn degree_fn(const Graph& g);
std::int64_t fn_sum(const VertexFn& f);

inline void check_fn_size(const VertexFn& f, int n, const char* what) {
  if (static_cast<int>(f.size()) != n)
    fail(errc::size_mismatch, std::string(what) + ": vertex function has wrong length");
}

} // namespace immune
