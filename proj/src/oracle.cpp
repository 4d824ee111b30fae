#include "immune/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace immune {

namespace {

// Smallest-lex filling: push as much budget as possible to the tail.
// Returns false if budget does not fit into positions [from, n).
bool tail_fill(VertexFn& v, const VertexFn& cap, int from, std::int64_t budget) {
  const int n = static_cast<int>(cap.size());
  for (int i = from; i < n; ++i) v[i] = 0;
  for (int i = n - 1; i >= from && budget > 0; --i) {
    int take = static_cast<int>(std::min<std::int64_t>(cap[i], budget));
    v[i] = take;
    budget -= take;
  }
  return budget == 0;
}

} // namespace

IncrementStream::IncrementStream(VertexFn iota_max, std::int64_t budget)
    : cap_(std::move(iota_max)), cur_(cap_.size(), 0), fresh_(true), done_(false) {
  if (budget < 0 || std::any_of(cap_.begin(), cap_.end(), [](int c) { return c < 0; })) {
    done_ = true;
    return;
  }
  if (!tail_fill(cur_, cap_, 0, budget)) done_ = true;
}

bool IncrementStream::next(VertexFn& out) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
    out = cur_;
    return true;
  }
  // Successor in lex order: take one unit from the suffix and give it to
  // the rightmost position that can grow, then refill the tail minimally.
  const int n = static_cast<int>(cap_.size());
  std::int64_t suffix = 0;
  for (int i = n - 1; i >= 0; --i) {
    if (i < n - 1) suffix += cur_[i + 1];
    if (cur_[i] < cap_[i] && suffix > 0) {
      ++cur_[i];
      tail_fill(cur_, cap_, i + 1, suffix - 1);
      out = cur_;
      return true;
    }
  }
  done_ = true;
  return false;
}

void for_each_increment(const VertexFn& iota_max, std::int64_t budget,
                        const std::function<void(const VertexFn&)>& fn) {
  IncrementStream stream(iota_max, budget);
  VertexFn iota;
  while (stream.next(iota)) fn(iota);
}

ExtInt vacc_bruteforce(const Graph& g, const VertexFn& tau, const VertexFn& iota_max,
                       std::int64_t b, int size_limit, BudgetMode mode) {
  check_fn_size(tau, g.n, "vacc_bruteforce");
  check_fn_size(iota_max, g.n, "vacc_bruteforce");
  if (g.n > size_limit)
    fail(errc::instance_too_large,
         "vacc_bruteforce: n=" + std::to_string(g.n) + " exceeds limit " + std::to_string(size_limit));

  ExtInt best = ExtInt::neg_inf();
  VertexFn bumped(g.n);
  auto eval = [&](const VertexFn& iota) {
    for (int u = 0; u < g.n; ++u) bumped[u] = tau[u] + iota[u];
    best = max(best, ExtInt(dyn_bruteforce(g, bumped)));
  };
  if (mode == BudgetMode::exact) {
    for_each_increment(iota_max, b, eval);
  } else {
    for (std::int64_t spent = 0; spent <= b; ++spent) for_each_increment(iota_max, spent, eval);
  }
  return best;
}

int vacc_formula_avg(const Graph& g, std::int64_t total) {
  if (total < 0 || total > 2 * static_cast<std::int64_t>(g.m) + g.n)
    fail(errc::total_out_of_range,
         "total " + std::to_string(total) + " outside [0, 2m+n]");
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b2) {
    return std::pair(g.degree(a), a) < std::pair(g.degree(b2), b2);
  });
  int k = 0;
  std::int64_t prefix = 0;
  for (int u : order) {
    prefix += g.degree(u) + 1;
    if (prefix > total) break;
    ++k;
  }
  return k;
}

} // namespace immune
