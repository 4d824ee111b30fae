#pragma once

#include <span>
#include <vector>

#include "immune/ext_int.hpp"
#include "immune/graph.hpp"

namespace immune {

/// One DP cell: x0(u,b') and x1(u,b'), where x1 corresponds to the
/// infection reaching u's parent first (u's threshold effectively lowered
/// by one). inc_self and child_budgets record a maximizing split of the
/// budget onto u and its subtrees, valid for both objectives.
struct DpCell {
  ExtInt x0 = ExtInt::neg_inf();
  ExtInt x1 = ExtInt::neg_inf();
  int inc_self = 0;
  std::vector<int> child_budgets;  // aligned with RootedTree children order
};

/// Full table over (vertex, budget 0..budget). Cells are -inf exactly
/// where the requested budget exceeds the subtree capacity.
struct DpTable {
  RootedTree tree;  // capacities attached
  VertexFn tau;
  VertexFn iota_max;
  int budget = 0;
  std::vector<std::vector<DpCell>> cells;

  const DpCell& cell(int u, int b) const { return cells[u][b]; }
};

/// Base case for a leaf u with 0 <= b <= iota_max(u):
/// x_j = 0 if tau(u) + b - j <= 0, else 1; all of b goes onto u.
DpCell leaf_cell(int tau_u, int iota_max_u, int b);

/// Combination table over a fixed child list: M(p, p_eq, b_prime) is the
/// best sum of x1(v_i, b_i) over partitions of b_prime - b_u onto the
/// first p children with exactly p_eq of them having x0 = x1; -inf when
/// infeasible (p_eq < 0, p_eq > p, b_prime < b_u, or budget exceeding the
/// children's combined capacity).
class MTable {
public:
  MTable() = default;
  ExtInt at(int p, int p_eq, int b_prime) const;
  int child_count() const { return k_; }
  int b_u() const { return b_u_; }

private:
  friend MTable m_table(const std::vector<std::vector<DpCell>>& child_cells, int b, int b_u);
  int k_ = 0;
  int b_u_ = 0;
  int smax_ = 0;
  std::vector<ExtInt> value_;  // (p, q, s) with s = b_prime - b_u
};

MTable m_table(const std::vector<std::vector<DpCell>>& child_cells, int b, int b_u);

/// Cell of an internal vertex for one budget b, maximizing over the split
/// (b_u, b_1, ..., b_k): the child-sum plus 1 unless at least
/// tau_u + b_u - j children are tight (x0 = x1).
DpCell combine_children(int tau_u, int iota_max_u,
                        const std::vector<std::vector<DpCell>>& child_cells, int b);

/// Bottom-up table for all vertices and budgets 0..b.
/// Throws errc::budget_infeasible unless 0 <= b <= iota_max(V).
DpTable run_dp(const RootedTree& t, const VertexFn& tau, const VertexFn& iota_max, int b);

/// vacc(T, tau, iota_max, b) = x0(root, b) of a feasible table.
int extract_vacc(const DpTable& table);

/// A witnessing increment: 0 <= iota <= iota_max, iota(V) = b, and
/// dyn(T, tau + iota) equals extract_vacc(table).
VertexFn reconstruct_increment(const DpTable& table);

/// dyn(T, tau), exactly (the b = 0 specialization of the table).
int dyn_tree(const RootedTree& t, const VertexFn& tau);

} // namespace immune
