#include "immune/io.hpp"

#include <charconv>
#include <fstream>
#include <vector>

namespace immune {

namespace {

// Whitespace-separated token reader with strict integer parsing.
class TokenReader {
public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next_token(std::string& tok) { return static_cast<bool>(in_ >> tok); }

  long long next_int(const char* what) {
    std::string tok;
    if (!next_token(tok)) fail(errc::parse_error, std::string("unexpected end of input, expected ") + what);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      fail(errc::parse_error, "malformed integer '" + tok + "' for " + what);
    return value;
  }

  void expect_end() {
    std::string tok;
    if (next_token(tok)) fail(errc::parse_error, "trailing content '" + tok + "'");
  }

private:
  std::istream& in_;
};

int to_int(long long v, const char* what) {
  if (v < INT32_MIN || v > INT32_MAX) fail(errc::parse_error, std::string(what) + " out of range");
  return static_cast<int>(v);
}

} // namespace

Graph read_graph(std::istream& in) {
  TokenReader r(in);
  const int n = to_int(r.next_int("vertex count"), "vertex count");
  const int m = to_int(r.next_int("edge count"), "edge count");
  if (n < 0 || m < 0) fail(errc::parse_error, "negative count in graph header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int u = to_int(r.next_int("edge endpoint"), "edge endpoint");
    const int v = to_int(r.next_int("edge endpoint"), "edge endpoint");
    edges.emplace_back(u, v);
  }
  r.expect_end();
  return build_graph(n, edges);
}

VertexFn read_vertex_fn(std::istream& in, int n) {
  TokenReader r(in);
  std::string first;
  if (!r.next_token(first)) {
    if (n == 0) return {};
    fail(errc::parse_error, "empty vertex-function input");
  }
  if (first == "const") {
    const int c = to_int(r.next_int("constant value"), "constant value");
    r.expect_end();
    return constant_fn(n, c);
  }

  auto parse_index = [&](const std::string& tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      fail(errc::parse_error, "malformed vertex index '" + tok + "'");
    return value;
  };

  VertexFn fn(n, 0);
  std::vector<char> seen(n, 0);
  long long v = parse_index(first);
  for (int count = 0;; ++count) {
    if (v < 0 || v >= n) fail(errc::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
    if (seen[v]) fail(errc::parse_error, "vertex " + std::to_string(v) + " assigned twice");
    seen[v] = 1;
    fn[v] = to_int(r.next_int("vertex value"), "vertex value");
    if (count + 1 == n) break;
    v = r.next_int("vertex index");
  }
  r.expect_end();
  return fn;
}

void write_vertex_fn(std::ostream& out, const VertexFn& fn) {
  for (std::size_t v = 0; v < fn.size(); ++v) out << v << ' ' << fn[v] << '\n';
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return read_graph(in);
}

VertexFn read_vertex_fn_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return read_vertex_fn(in, n);
}

} // namespace immune
