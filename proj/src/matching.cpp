#include "immune/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "immune/oracle.hpp"

namespace immune {

bool Matching::covers(int u) const {
  for (auto [a, b] : edges)
    if (a == u || b == u) return true;
  return false;
}

void validate_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.n, 0);
  for (auto [u, v] : m.edges) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || !g.has_edge(u, v))
      fail(errc::invalid_matching,
           "matching edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    if (used[u] || used[v])
      fail(errc::invalid_matching, "matching edges share vertex " + std::to_string(used[u] ? u : v));
    used[u] = used[v] = 1;
  }
}

namespace {

Matching normalized(std::vector<Edge> edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  return Matching{std::move(edges)};
}

} // namespace

VertexFn tau_from_matching(const Graph& g, const Matching& m) {
  validate_matching(g, m);
  VertexFn tau(g.n, 0);
  for (auto [u, v] : m.edges) {
    tau[u] = g.degree(u);
    tau[v] = g.degree(v);
  }
  return tau;
}

Matching max_matching_tree(const RootedTree& t) {
  std::vector<char> matched(t.n(), 0);
  std::vector<Edge> edges;
  for (int u : t.postorder) {
    const int p = t.parent[u];
    if (p >= 0 && !matched[u] && !matched[p]) {
      matched[u] = matched[p] = 1;
      edges.emplace_back(u, p);
    }
  }
  return normalized(std::move(edges));
}

Matching max_matching_bruteforce(const Graph& g, int size_limit) {
  if (g.n > size_limit && g.m > 2 * size_limit)
    fail(errc::instance_too_large, "max_matching_bruteforce: instance exceeds limit " +
                                       std::to_string(size_limit));
  const std::vector<Edge> edges = g.edges();
  std::vector<char> used(g.n, 0);
  std::vector<Edge> current, best;

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (current.size() > best.size()) best = current;
    if (i == edges.size()) return;
    if (current.size() + (edges.size() - i) <= best.size()) return;
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      current.push_back(edges[i]);
      self(self, i + 1);
      current.pop_back();
      used[u] = used[v] = 0;
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return normalized(std::move(best));
}

void for_each_matching(const Graph& g, const std::function<void(const Matching&)>& fn) {
  const std::vector<Edge> edges = g.edges();
  std::vector<char> used(g.n, 0);
  Matching current;

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      fn(current);
      return;
    }
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      current.edges.push_back(edges[i]);
      self(self, i + 1);
      current.edges.pop_back();
      used[u] = used[v] = 0;
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);
}

VertexSet min_vertex_cover_bruteforce(const Graph& g, int size_limit) {
  if (g.n > size_limit || g.n > 30)
    fail(errc::instance_too_large, "min_vertex_cover_bruteforce: n=" + std::to_string(g.n) +
                                       " exceeds limit " + std::to_string(size_limit));
  const std::vector<Edge> edges = g.edges();
  for (int k = 0; k <= g.n; ++k) {
    if (k == 0) {
      if (edges.empty()) return VertexSet(g.n);
      continue;
    }
    std::uint32_t comb = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << g.n;
    while (comb < limit) {
      bool ok = true;
      for (auto [u, v] : edges) {
        if (!(comb & (std::uint32_t{1} << u)) && !(comb & (std::uint32_t{1} << v))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        VertexSet cover(g.n);
        for (int u = 0; u < g.n; ++u)
          if (comb & (std::uint32_t{1} << u)) cover.insert(u);
        return cover;
      }
      std::uint32_t c = comb & -comb;
      std::uint32_t r = comb + c;
      comb = (((r ^ comb) >> 2) / c) | r;
    }
  }
  return VertexSet::full(g.n);  // unreachable: V covers everything
}

namespace {

// Best dyn(G, tau_M) over matchings with tau_M(V) <= b, with the first
// maximizer in enumeration order as witness.
std::pair<std::int64_t, Matching> best_matching_dyn(const Graph& g, int b, int size_limit) {
  std::int64_t best = -1;
  Matching witness;
  for_each_matching(g, [&](const Matching& m) {
    std::int64_t covered_degree = 0;
    for (auto [u, v] : m.edges) covered_degree += g.degree(u) + g.degree(v);
    if (covered_degree > b) return;
    const int d = dyn_bruteforce(g, tau_from_matching(g, m), std::max(size_limit, kDynSizeLimit));
    if (d > best) {
      best = d;
      witness = m;
    }
  });
  return {best, normalized(std::move(witness.edges))};
}

std::int64_t vacc_lhs(const Graph& g, int b, int size_limit) {
  const ExtInt lhs = vacc_bruteforce(g, constant_fn(g.n, 0), degree_fn(g), b, size_limit);
  return lhs.value();  // b <= 2m = sum of degrees keeps this finite
}

} // namespace

CheckReport khza_check(const Graph& tree, int b, int size_limit) {
  if (tree.m != tree.n - 1 || !tree.is_connected())
    fail(errc::not_a_tree, "khza_check requires a tree");
  if (b < 0 || b > 2 * tree.m)
    fail(errc::budget_out_of_range, "khza_check requires 0 <= b <= 2m");
  CheckReport rep;
  rep.lhs = vacc_lhs(tree, b, size_limit);
  std::tie(rep.rhs, rep.witness) = best_matching_dyn(tree, b, size_limit);
  rep.holds = (rep.lhs == rep.rhs);
  return rep;
}

CheckReport conjecture1_check(const Graph& g, int b, int size_limit) {
  if (b < 0 || b > 2 * g.m)
    fail(errc::budget_out_of_range, "conjecture1_check requires 0 <= b <= 2m");
  CheckReport rep;
  rep.lhs = vacc_lhs(g, b, size_limit);
  std::tie(rep.rhs, rep.witness) = best_matching_dyn(g, b, size_limit);
  rep.holds = (rep.lhs <= 2 * rep.rhs);
  return rep;
}

CheckReport theorem2_check(const Graph& g, int b, int size_limit) {
  if (g.n == 0) fail(errc::not_regular, "empty graph");
  const int r = g.degree(0);
  for (int u = 1; u < g.n; ++u)
    if (g.degree(u) != r) fail(errc::not_regular, "graph is not regular");
  const std::int64_t lo = (2LL * r - 1) * (r + 1);
  const std::int64_t hi = static_cast<std::int64_t>(r) * g.n;
  if (b < lo || b > hi)
    fail(errc::budget_out_of_range, "theorem2_check requires (2r-1)(r+1) <= b <= rn");

  CheckReport rep = conjecture1_check(g, b, size_limit);

  // Ackerman step: vacc <= b/(r+1).
  bool chain_ok = rep.lhs * (r + 1) <= b;

  const Matching maximum = max_matching_bruteforce(g, std::max(size_limit, kMatchingSizeLimit));
  const std::int64_t nu = maximum.size();
  const int dyn_limit = std::max(size_limit, kDynSizeLimit);

  if (2LL * r * nu > b) {
    rep.case_id = 1;
    // A matching of size floor(b/2r) exists and pins b between 2r|M| and
    // 2r(|M|+1) - 1; its dyn is at least |M|, closing the chain.
    const std::int64_t target = r > 0 ? b / (2LL * r) : 0;
    chain_ok = chain_ok && target <= nu;
    chain_ok = chain_ok && 2 * r * target <= b && 2LL * r * (target + 1) >= b + 1;
    chain_ok = chain_ok && 2 * target * (r + 1) >= b;
    if (chain_ok) {
      Matching sub{{maximum.edges.begin(), maximum.edges.begin() + target}};
      chain_ok = dyn_bruteforce(g, tau_from_matching(g, sub), dyn_limit) >= target;
    }
  } else {
    rep.case_id = 2;
    // 2 dyn(G, tau_M) >= 2 nu >= |min cover| >= dyn(G, d_G) >= vacc.
    const VertexSet cover = min_vertex_cover_bruteforce(g, std::max(size_limit, kMatchingSizeLimit));
    const VertexFn degrees = degree_fn(g);
    chain_ok = chain_ok && dyn_bruteforce(g, tau_from_matching(g, maximum), dyn_limit) >= nu;
    chain_ok = chain_ok && cover.size() <= 2 * nu;
    chain_ok = chain_ok && is_dynamic_monopoly(g, degrees, cover);
    chain_ok = chain_ok && dyn_bruteforce(g, degrees, dyn_limit) >= rep.lhs;
  }
  rep.holds = rep.holds && chain_ok;
  return rep;
}

} // namespace immune
