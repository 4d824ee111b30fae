#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "immune/graph.hpp"

namespace immune {

/// Graph text format: header "n m", then m lines "u v", 0-indexed.
Graph read_graph(std::istream& in);

/// Vertex-function format: either n lines "vertex value" covering every
/// vertex exactly once, or the single entry "const c".
VertexFn read_vertex_fn(std::istream& in, int n);

void write_vertex_fn(std::ostream& out, const VertexFn& fn);

Graph read_graph_file(const std::string& path);
VertexFn read_vertex_fn_file(const std::string& path, int n);

} // namespace immune
