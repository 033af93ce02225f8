#include "steiner/counting.hpp"

#include <array>

#include "steiner/errors.hpp"
#include "steiner/verifier.hpp"

namespace steiner {

std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (root > 0 && root > x / root) --root;
  while ((root + 1) <= x / (root + 1)) ++root;
  return root;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

BigInt predicted_mod_sum_edges(std::uint64_t n) {
  if (n < 4 || n % 2 != 0)
    throw ConstructionDomainError("the mod-sum count requires even n >= 4");
  // C(n,3)/4 - n(n-2)/8; integral for even n.
  const BigInt c3 = binomial(n, 3);
  const BigInt corr = BigInt(n) * (n - 2);
  return (2 * c3 - corr) / 8;
}

BigInt predicted_mod_sum_zero_triples(std::uint64_t n) {
  if (n < 4 || n % 2 != 0)
    throw ConstructionDomainError("the mod-sum count requires even n >= 4");
  return BigInt(n) * (n - 2) / 2;
}

BigRat linear_upper_bound(std::uint32_t r, std::uint64_t n) {
  if (r < 2 || n < r) throw UsageError("need n >= r >= 2");
  return BigRat(binomial(n, r - 1), r);
}

std::uint64_t count_zero_sum_subsets(std::uint32_t d, std::uint32_t k,
                                     std::uint64_t max_subsets) {
  if (d == 0 || d >= 32) throw UsageError("binary exponent must be in [1, 31]");
  if (k == 0) throw UsageError("subset size must be positive");
  const std::uint64_t n = std::uint64_t{1} << d;
  if (k > n) return 0;
  const std::uint64_t budget = max_subsets ? max_subsets : naive_check_budget();
  if (binomial(n, k) > budget)
    throw BudgetError("zero-sum enumeration over C(" + std::to_string(n) + "," +
                      std::to_string(k) + ") subsets exceeds the budget of " +
                      std::to_string(budget));

  std::uint64_t count = 0;
  std::vector<std::uint32_t> chosen(k);
  auto recurse = [&](auto&& self, std::uint32_t depth, std::uint32_t start,
                     std::uint32_t acc) -> void {
    if (depth == k) {
      if (acc == 0) ++count;
      return;
    }
    for (std::uint32_t v = start; v + (k - depth) <= n; ++v) {
      self(self, depth + 1, v + 1, acc ^ v);
    }
  };
  recurse(recurse, 0, 0, 0);
  return count;
}

BigRat zero_sum_density_ratio(std::uint32_t d, std::uint32_t k,
                              std::uint64_t max_subsets) {
  const std::uint64_t n = std::uint64_t{1} << d;
  const std::uint64_t count = count_zero_sum_subsets(d, k, max_subsets);
  return BigRat(BigInt(count) * n, binomial(n, k));
}

CountReport density_report(const Hypergraph& h, const ConstructionMeta& meta,
                           unsigned threads) {
  CountReport report;
  report.actual = h.edge_count();
  report.upper_bound = linear_upper_bound(h.uniformity(), h.vertex_count());
  report.density_ratio =
      report.upper_bound == 0 ? BigRat(0)
                              : BigRat(report.actual) / report.upper_bound;

  switch (meta.name) {
    case ConstructionName::ModSum:
      if (meta.used_n >= 4 && meta.used_n % 2 == 0)
        report.predicted = predicted_mod_sum_edges(meta.used_n);
      break;
    case ConstructionName::Product: {
      // m^(r-1) times the recomputed binary edge count.
      const std::uint64_t m = meta.group.modulus;
      const std::uint32_t d = meta.group.exponent;
      const Hypergraph shadow = build_binary(meta.r, d, threads);
      BigInt factor = 1;
      for (std::uint32_t i = 0; i + 1 < meta.r; ++i) factor *= m;
      report.predicted = factor * shadow.edge_count();
      break;
    }
    case ConstructionName::Binary:
    case ConstructionName::External:
      break;
  }

  const std::uint32_t k = h.uniformity() - 1;
  report.degree0_count =
      binomial(h.vertex_count(), k) - occupied_subset_count(h, k, threads);
  return report;
}

}  // namespace steiner
