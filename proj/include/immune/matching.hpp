#pragma once

#include <functional>
#include <vector>

#include "immune/graph.hpp"
#include "immune/oracle.hpp"
#include "immune/spread.hpp"

namespace immune {

/// Set of pairwise non-adjacent edges of a host graph; edges normalized
/// to (u, v) with u < v and kept sorted.
struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
  bool covers(int u) const;
};

void validate_matching(const Graph& g, const Matching& m);

/// tau_M: degree at matched vertices, zero elsewhere.
VertexFn tau_from_matching(const Graph& g, const Matching& m);

/// Maximum matching of a tree by greedy postorder pairing: an unmatched
/// vertex grabs its parent. Optimal on trees.
Matching max_matching_tree(const RootedTree& t);

inline constexpr int kMatchingSizeLimit = 12;

/// Maximum matching by branch and bound over the edge list.
Matching max_matching_bruteforce(const Graph& g, int size_limit = kMatchingSizeLimit);

/// Visits every matching of g (including the empty one) exactly once.
void for_each_matching(const Graph& g, const std::function<void(const Matching&)>& fn);

/// Smallest vertex cover, by exhaustive search over ascending cardinality.
VertexSet min_vertex_cover_bruteforce(const Graph& g, int size_limit = kMatchingSizeLimit);

/// Outcome of one empirical check. lhs is the vacc side, rhs the best
/// dyn(G, tau_M) over admissible matchings, witness a matching attaining
/// rhs. case_id is 0 except from theorem2_check (then 1 or 2).
struct CheckReport {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  Matching witness;
  int case_id = 0;
  bool holds = false;
};

/// Trees: vacc(T, 0, d_T, b) equals the best dyn(T, tau_M) over matchings
/// with tau_M(V) <= b. Exhaustive at desk scale.
CheckReport khza_check(const Graph& tree, int b, int size_limit = kVaccSizeLimit);

/// General graphs: vacc(G, 0, d_G, b) <= 2 dyn(G, tau_M) for some matching
/// with tau_M(V) <= b.
CheckReport conjecture1_check(const Graph& g, int b, int size_limit = kVaccSizeLimit);

/// r-regular graphs with (2r-1)(r+1) <= b <= rn: conjecture1_check plus the
/// two-case certificate (Ackerman step, then a matching of the right size
/// or a vertex-cover argument depending on whether 2 r nu exceeds b).
CheckReport theorem2_check(const Graph& g, int b, int size_limit = kVaccSizeLimit);

} // namespace immune
