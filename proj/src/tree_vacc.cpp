#include "immune/tree_vacc.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace immune {

namespace {

bool cell_tight(const DpCell& c) { return c.x1.is_finite() && c.x0 == c.x1; }

// Knapsack-style combination over a child list. value(p, q, s) is the best
// sum of x1(v_i, b_i) over budget splits of s onto the first p children of
// `rows` with exactly q of them tight (x0 = x1); back(p, q, s) is the
// budget given to child p in a maximizing split, smallest first on ties.
struct ChildTable {
  int k = 0;
  int smax = 0;
  std::vector<ExtInt> value;
  std::vector<int> back;

  std::size_t idx(int p, int q, int s) const {
    return (static_cast<std::size_t>(p) * (k + 1) + q) * (smax + 1) + s;
  }
  ExtInt at(int p, int q, int s) const {
    if (p < 0 || p > k || q < 0 || q > p || s < 0 || s > smax) return ExtInt::neg_inf();
    return value[idx(p, q, s)];
  }
};

ChildTable build_child_table(const std::vector<std::span<const DpCell>>& rows, int smax) {
  ChildTable t;
  t.k = static_cast<int>(rows.size());
  t.smax = smax;
  const std::size_t cells = static_cast<std::size_t>(t.k + 1) * (t.k + 1) * (smax + 1);
  t.value.assign(cells, ExtInt::neg_inf());
  t.back.assign(cells, -1);
  t.value[t.idx(0, 0, 0)] = ExtInt(0);

  for (int p = 1; p <= t.k; ++p) {
    const auto& row = rows[p - 1];
    const int row_top = static_cast<int>(row.size()) - 1;
    for (int s = 0; s <= smax; ++s) {
      for (int q = 0; q <= p; ++q) {
        ExtInt best = ExtInt::neg_inf();
        int best_budget = -1;
        const int top = std::min(s, row_top);
        for (int beta = 0; beta <= top; ++beta) {
          const DpCell& c = row[beta];
          if (c.x1.is_neg_inf()) continue;
          const int qq = q - (cell_tight(c) ? 1 : 0);
          if (qq < 0 || qq > p - 1) continue;
          const ExtInt prev = t.value[t.idx(p - 1, qq, s - beta)];
          if (prev.is_neg_inf()) continue;
          const ExtInt cand = prev + c.x1;
          if (cand > best) {
            best = cand;
            best_budget = beta;
          }
        }
        const std::size_t i = t.idx(p, q, s);
        t.value[i] = best;
        t.back[i] = best_budget;
      }
    }
  }
  return t;
}

struct ScanResult {
  ExtInt val = ExtInt::neg_inf();
  int b_u = -1;
  int q = -1;
};

// max over b_u and tight-count q of [q < tau_u + b_u - j] + value(k, q, b - b_u),
// preferring smaller b_u, then smaller q, among maximizers.
ScanResult scan_budget_splits(const ChildTable& t, int tau_u, int iota_max_u, int b, int j) {
  ScanResult r;
  const int bu_top = static_cast<int>(std::min<std::int64_t>(iota_max_u, b));
  for (int b_u = 0; b_u <= bu_top; ++b_u) {
    const int s = b - b_u;
    if (s > t.smax) continue;
    const std::int64_t need_tight = static_cast<std::int64_t>(tau_u) + b_u - j;
    for (int q = 0; q <= t.k; ++q) {
      const ExtInt v = t.at(t.k, q, s);
      if (v.is_neg_inf()) continue;
      const ExtInt cand = (q < need_tight) ? v + ExtInt(1) : v;
      if (cand > r.val) {
        r.val = cand;
        r.b_u = b_u;
        r.q = q;
      }
    }
  }
  return r;
}

// Budgets (in `rows` order) of the recorded maximizing split for class
// (q, s) over all k children.
std::vector<int> walk_partition(const ChildTable& t,
                                const std::vector<std::span<const DpCell>>& rows, int q, int s) {
  std::vector<int> budgets(t.k, 0);
  for (int p = t.k; p > 0; --p) {
    const int beta = t.back[t.idx(p, q, s)];
    assert(beta >= 0);
    budgets[p - 1] = beta;
    if (cell_tight(rows[p - 1][beta])) --q;
    s -= beta;
  }
  assert(q == 0 && s == 0);
  return budgets;
}

// rows_rev holds the children reversed, so that the reconstruction walk
// emits the first child's budget first and ties resolve to the
// lexicographically smallest assignment in child order.
DpCell combine_cell(const ChildTable& t, const std::vector<std::span<const DpCell>>& rows_rev,
                    int tau_u, int iota_max_u, int b) {
  DpCell cell;
  const ScanResult r0 = scan_budget_splits(t, tau_u, iota_max_u, b, 0);
  const ScanResult r1 = scan_budget_splits(t, tau_u, iota_max_u, b, 1);
  cell.x0 = r0.val;
  cell.x1 = r1.val;
  if (cell.x0.is_neg_inf()) return cell;

  // An x1-maximizing split attains x0 when the two values coincide, and an
  // x0-maximizing split attains x1 when they differ by one; either way the
  // stored split realizes both objectives, so child increments can be
  // reused verbatim during reconstruction.
  const ScanResult& pick = (cell.x0 > cell.x1) ? r0 : r1;
  cell.inc_self = pick.b_u;
  const std::vector<int> budgets_rev = walk_partition(t, rows_rev, pick.q, b - pick.b_u);
  cell.child_budgets.assign(t.k, 0);
  for (int p = 1; p <= t.k; ++p) cell.child_budgets[t.k - p] = budgets_rev[p - 1];
  return cell;
}

} // namespace

DpCell leaf_cell(int tau_u, int iota_max_u, int b) {
  assert(b >= 0 && b <= iota_max_u);
  (void)iota_max_u;
  DpCell c;
  c.x0 = (static_cast<std::int64_t>(tau_u) + b <= 0) ? ExtInt(0) : ExtInt(1);
  c.x1 = (static_cast<std::int64_t>(tau_u) + b - 1 <= 0) ? ExtInt(0) : ExtInt(1);
  c.inc_self = b;
  return c;
}

ExtInt MTable::at(int p, int p_eq, int b_prime) const {
  if (p < 0 || p > k_ || p_eq < 0 || p_eq > p) return ExtInt::neg_inf();
  const int s = b_prime - b_u_;
  if (s < 0 || s > smax_) return ExtInt::neg_inf();
  return value_[(static_cast<std::size_t>(p) * (k_ + 1) + p_eq) * (smax_ + 1) + s];
}

MTable m_table(const std::vector<std::vector<DpCell>>& child_cells, int b, int b_u) {
  std::vector<std::span<const DpCell>> rows(child_cells.begin(), child_cells.end());
  ChildTable core = build_child_table(rows, std::max(b - b_u, 0));
  MTable m;
  m.k_ = core.k;
  m.b_u_ = b_u;
  m.smax_ = core.smax;
  m.value_ = std::move(core.value);
  return m;
}

DpCell combine_children(int tau_u, int iota_max_u,
                        const std::vector<std::vector<DpCell>>& child_cells, int b) {
  std::vector<std::span<const DpCell>> rows_rev;
  rows_rev.reserve(child_cells.size());
  for (auto it = child_cells.rbegin(); it != child_cells.rend(); ++it) rows_rev.emplace_back(*it);
  const ChildTable core = build_child_table(rows_rev, b);
  return combine_cell(core, rows_rev, tau_u, iota_max_u, b);
}

DpTable run_dp(const RootedTree& t, const VertexFn& tau, const VertexFn& iota_max, int b) {
  check_fn_size(tau, t.n(), "run_dp");
  check_fn_size(iota_max, t.n(), "run_dp");
  RootedTree tree = attach_capacities(t, iota_max);
  if (b < 0 || b > tree.subtree_capacity[tree.root])
    fail(errc::budget_infeasible, "budget " + std::to_string(b) + " outside [0, iota_max(V) = " +
                                      std::to_string(tree.subtree_capacity[tree.root]) + "]");

  DpTable table;
  table.tree = std::move(tree);
  table.tau = tau;
  table.iota_max = iota_max;
  table.budget = b;
  table.cells.assign(t.n(), std::vector<DpCell>(b + 1));

  for (int u : table.tree.postorder) {
    const auto& kids = table.tree.children[u];
    if (kids.empty()) {
      const int top = static_cast<int>(std::min<std::int64_t>(b, iota_max[u]));
      for (int bp = 0; bp <= top; ++bp) table.cells[u][bp] = leaf_cell(tau[u], iota_max[u], bp);
      // cells above iota_max(u) stay -inf
    } else {
      std::vector<std::span<const DpCell>> rows_rev;
      rows_rev.reserve(kids.size());
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) rows_rev.emplace_back(table.cells[*it]);
      const ChildTable core = build_child_table(rows_rev, b);
      for (int bp = 0; bp <= b; ++bp)
        table.cells[u][bp] = combine_cell(core, rows_rev, tau[u], iota_max[u], bp);
    }
  }
  return table;
}

int extract_vacc(const DpTable& table) {
  const ExtInt v = table.cell(table.tree.root, table.budget).x0;
  if (v.is_neg_inf()) throw std::logic_error("extract_vacc on an infeasible table");
  return static_cast<int>(v.value());
}

VertexFn reconstruct_increment(const DpTable& table) {
  VertexFn iota(table.tree.n(), 0);
  std::vector<std::pair<int, int>> stack{{table.tree.root, table.budget}};
  while (!stack.empty()) {
    auto [u, bp] = stack.back();
    stack.pop_back();
    const DpCell& c = table.cell(u, bp);
    iota[u] = c.inc_self;
    const auto& kids = table.tree.children[u];
    assert(c.child_budgets.size() == kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i)
      stack.emplace_back(kids[i], c.child_budgets[i]);
  }
  assert(fn_sum(iota) == table.budget);
  return iota;
}

int dyn_tree(const RootedTree& t, const VertexFn& tau) {
  return extract_vacc(run_dp(t, tau, constant_fn(t.n(), 0), 0));
}

} // namespace immune
