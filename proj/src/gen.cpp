#include "immune/gen.hpp"

#include <random>

namespace immune {

Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph make_star(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return build_graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) fail(errc::vertex_out_of_range, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.emplace_back(static_cast<int>(rng() % i), i);
  return build_graph(n, edges);
}

} // namespace immune
