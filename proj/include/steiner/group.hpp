#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace steiner {

enum class GroupKind { Cyclic, Binary, Product };

// The three vertex groups the constructions live on: Z_n, Z_2^d and
// Z_m (+) Z_2^d. Elements are canonical indices in [0, order()):
//
//   cyclic   index = the residue
//   binary   index = the d-bit vector read as an integer
//   product  index = x * 2^d + y with cyclic part x and binary part y
//
// Index 0 is the identity in every variant, and the encoding is fixed so
// serialized hypergraphs are reproducible bit-for-bit.
struct GroupSpec {
  GroupKind kind = GroupKind::Cyclic;
  std::uint64_t modulus = 1;   // n for cyclic, m for product, unused for binary
  std::uint32_t exponent = 0;  // d for binary and product

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec binary(std::uint32_t d);
  static GroupSpec product(std::uint64_t m, std::uint32_t d);

  std::uint64_t order() const;

  // Group sum of two canonical indices; throws UsageError when out of range.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t negate(std::uint64_t a) const;
  // Left fold of add; the empty sum is the identity.
  std::uint64_t sum(std::span<const std::uint64_t> elems) const;

  // Header token: Z<n>, Z2^<d> or Z<m>xZ2^<d>.
  std::string token() const;
  static std::optional<GroupSpec> parse_token(std::string_view token);

  bool operator==(const GroupSpec&) const = default;
};

// Strict decimal parse: digits only, no leading zeros, no empty string.
std::optional<std::uint64_t> parse_uint_strict(std::string_view text);

}  // namespace steiner
