#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "steiner/group.hpp"
#include "steiner/hypergraph.hpp"

namespace steiner {

enum class ConstructionName { ModSum, Binary, Product, External };

std::string construction_token(ConstructionName name);
std::optional<ConstructionName> parse_construction_token(std::string_view token);

struct ConstructionMeta {
  ConstructionName name = ConstructionName::External;
  GroupSpec group;
  std::uint32_t r = 0;
  std::uint64_t requested_n = 0;
  std::uint64_t used_n = 0;
};

// Theorem-4 style parameter choice for r > 4: d = floor(log2 sqrt(n)),
// m = floor(n / 2^d). Satisfies 0 <= n - m*2^d < 2^d and 2^d <= sqrt(n).
struct ParamChoice {
  std::uint32_t d = 0;
  std::uint64_t m = 0;
  std::uint64_t n_used = 0;
};

// 4-graph on Z_n (n even, n >= 4): {i,j,k,l} is an edge iff
// i+j+k+l = 1 (mod n). Edge count is C(n,3)/4 - n(n-2)/8 exactly.
Hypergraph build_mod_sum(std::uint64_t n, unsigned threads = 0);

// r-graph on Z_2^d (r > 4, 2^d >= r): an r-set is an edge iff it sums to
// zero and contains no zero-sum subset of size 4 or r-4.
Hypergraph build_binary(std::uint32_t r, std::uint32_t d, unsigned threads = 0);

// r-graph on Z_m (+) Z_2^d: an r-set is an edge iff its cyclic parts sum
// to 0 mod m and its binary shadow is an edge of build_binary(r, d).
// Edge count is m^(r-1) times that of build_binary(r, d). m = 1 is the
// binary construction itself.
Hypergraph build_product(std::uint32_t r, std::uint64_t m, std::uint32_t d,
                         unsigned threads = 0);

ParamChoice select_params(std::uint32_t r, std::uint64_t n);

struct AutoBuild {
  Hypergraph graph;
  ConstructionMeta meta;
};

// Dispatch: r = 4 uses the mod-sum construction on the largest even
// n' <= n; r > 4 selects (m, d) and builds the product construction.
// r <= 3 is unsupported.
AutoBuild build_auto(std::uint32_t r, std::uint64_t n, unsigned threads = 0);

// Smallest n for which build_auto(r, n) is feasible.
std::uint64_t minimal_auto_n(std::uint32_t r);

}  // namespace steiner
