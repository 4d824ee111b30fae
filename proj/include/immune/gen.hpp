#pragma once

#include <cstdint>

#include "immune/graph.hpp"

namespace immune {

Graph make_path(int n);
Graph make_star(int n);  // center is vertex 0
Graph make_cycle(int n);

/// Uniform-attachment random tree: vertex i links to a uniform earlier
/// vertex. Deterministic for a fixed seed.
Graph random_tree(int n, std::uint64_t seed);

} // namespace immune
