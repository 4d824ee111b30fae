#pragma once

#include <boost/rational.hpp>
#include <initializer_list>
#include <vector>

#include "immune/graph.hpp"

namespace immune {

using Rational = boost::rational<std::int64_t>;

/// Set of vertices of a fixed universe 0..n-1 with sorted iteration.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int n) : in_(n, false), count_(0) {}
  VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n) {
    for (int v : vs) insert(v);
  }

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  int universe_size() const { return static_cast<int>(in_.size()); }
  int size() const { return count_; }
  bool contains(int v) const { return in_[v]; }

  void insert(int v) {
    if (!in_[v]) {
      in_[v] = true;
      ++count_;
    }
  }
  void erase(int v) {
    if (in_[v]) {
      in_[v] = false;
      --count_;
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 0; v < universe_size(); ++v)
      if (in_[v]) out.push_back(v);
    return out;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (int v = 0; v < universe_size(); ++v)
      if (in_[v] && !o.in_[v]) return false;
    return true;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.in_ == b.in_;
  }

private:
  std::vector<bool> in_;
  int count_ = 0;
};

/// Closure of seed under "u joins once at least tau(u) of its neighbors are
/// in". Vertices with tau(u) <= 0 always end up in the result. Worklist
/// propagation with per-vertex counters, O(n+m).
VertexSet compute_hull(const Graph& g, const VertexFn& tau, const VertexSet& seed);

bool is_dynamic_monopoly(const Graph& g, const VertexFn& tau, const VertexSet& seed);

inline constexpr int kDynSizeLimit = 20;

/// Smallest dynamic monopoly, by exhaustive search over seed sets of
/// ascending cardinality. Vertices with tau(u) > deg(u) can never be
/// activated by neighbors and are forced into every candidate.
VertexSet min_monopoly(const Graph& g, const VertexFn& tau, int size_limit = kDynSizeLimit);

int dyn_bruteforce(const Graph& g, const VertexFn& tau, int size_limit = kDynSizeLimit);

/// Sum over u of tau(u)/(deg(u)+1), exact. Requires 0 <= tau <= deg.
Rational ackerman_bound(const Graph& g, const VertexFn& tau);

} // namespace immune
