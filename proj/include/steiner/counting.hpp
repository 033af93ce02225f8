#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "steiner/constructions.hpp"
#include "steiner/hypergraph.hpp"

namespace steiner {

// All closed-form arithmetic is exact; floating point only ever appears in
// human-readable rendering.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(std::uint64_t n, std::uint64_t k);

// C(n,3)/4 - n(n-2)/8, integral for even n >= 4.
BigInt predicted_mod_sum_edges(std::uint64_t n);

// n(n-2)/2: triples of degree 0 in the mod-sum construction.
BigInt predicted_mod_sum_zero_triples(std::uint64_t n);

// C(n, r-1) / r as an exact rational; every graph in which all
// (r-1)-subsets have degree <= 1 has at most this many edges.
BigRat linear_upper_bound(std::uint32_t r, std::uint64_t n);

struct CountReport {
  std::uint64_t actual = 0;
  std::optional<BigInt> predicted;  // mod-sum and product only
  BigRat upper_bound = 0;           // C(n, r-1) / r
  BigRat density_ratio = 0;         // actual / upper_bound
  BigInt degree0_count = 0;         // (r-1)-subsets of degree 0
};

// Assembles the full report for a constructed (or external) hypergraph.
// The predicted count is the closed form for mod-sum, m^(r-1) times the
// recomputed binary edge count for product, and absent otherwise.
CountReport density_report(const Hypergraph& h, const ConstructionMeta& meta,
                           unsigned threads = 0);

// Exact number of k-subsets of Z_2^d summing to zero, by enumeration.
// Refuses when C(2^d, k) exceeds the budget (0 = naive_check_budget()).
std::uint64_t count_zero_sum_subsets(std::uint32_t d, std::uint32_t k,
                                     std::uint64_t max_subsets = 0);

// count / (C(n,k)/n) with n = 2^d: the paper-style normalization of the
// zero-sum count, as an exact rational.
BigRat zero_sum_density_ratio(std::uint32_t d, std::uint32_t k,
                              std::uint64_t max_subsets = 0);

// floor(sqrt(x)) on integers.
std::uint64_t isqrt(std::uint64_t x);

}  // namespace steiner
