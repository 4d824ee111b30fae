#pragma once

#include <functional>

#include "immune/ext_int.hpp"
#include "immune/graph.hpp"
#include "immune/spread.hpp"

namespace immune {

/// Streams every increment 0 <= iota <= iota_max with iota(V) = budget,
/// in ascending lexicographic order, without materializing the list.
class IncrementStream {
public:
  IncrementStream(VertexFn iota_max, std::int64_t budget);

  /// Writes the next increment into out; false once exhausted.
  bool next(VertexFn& out);

private:
  VertexFn cap_;
  VertexFn cur_;
  bool fresh_;
  bool done_;
};

void for_each_increment(const VertexFn& iota_max, std::int64_t budget,
                        const std::function<void(const VertexFn&)>& fn);

enum class BudgetMode { exact, at_most };

inline constexpr int kVaccSizeLimit = 10;

/// Max of dyn(G, tau + iota) over all increments with iota(V) = b
/// (or <= b in at_most mode); -inf when no increment is feasible.
ExtInt vacc_bruteforce(const Graph& g, const VertexFn& tau, const VertexFn& iota_max,
                       std::int64_t b, int size_limit = kVaccSizeLimit,
                       BudgetMode mode = BudgetMode::exact);

/// Largest k such that the k smallest values of deg(u)+1 sum to at most
/// total. Equals vacc(G, 0, d_G + 1, total).
int vacc_formula_avg(const Graph& g, std::int64_t total);

} // namespace immune
