#include "steiner/group.hpp"

#include <limits>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  // a, b < n; avoids overflow for any n.
  return a >= n - b ? a - (n - b) : a + b;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  if (n == 0) throw UsageError("cyclic group order must be positive");
  return {GroupKind::Cyclic, n, 0};
}

GroupSpec GroupSpec::binary(std::uint32_t d) {
  if (d == 0 || d >= 64) throw UsageError("binary exponent must be in [1, 63]");
  return {GroupKind::Binary, 1, d};
}

GroupSpec GroupSpec::product(std::uint64_t m, std::uint32_t d) {
  if (m == 0) throw UsageError("product multiplier must be positive");
  if (d == 0 || d >= 64) throw UsageError("binary exponent must be in [1, 63]");
  if (m > (std::numeric_limits<std::uint64_t>::max() >> d))
    throw UsageError("group order overflows 64 bits");
  return {GroupKind::Product, m, d};
}

std::uint64_t GroupSpec::order() const {
  switch (kind) {
    case GroupKind::Cyclic:
      return modulus;
    case GroupKind::Binary:
      return std::uint64_t{1} << exponent;
    case GroupKind::Product:
      return modulus << exponent;
  }
  return 0;
}

std::uint64_t GroupSpec::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t ord = order();
  if (a >= ord || b >= ord) throw UsageError("element index out of range");
  switch (kind) {
    case GroupKind::Cyclic:
      return mod_add(a, b, modulus);
    case GroupKind::Binary:
      return a ^ b;
    case GroupKind::Product: {
      const std::uint64_t mask = (std::uint64_t{1} << exponent) - 1;
      const std::uint64_t x = mod_add(a >> exponent, b >> exponent, modulus);
      return (x << exponent) | ((a ^ b) & mask);
    }
  }
  return 0;
}

std::uint64_t GroupSpec::negate(std::uint64_t a) const {
  const std::uint64_t ord = order();
  if (a >= ord) throw UsageError("element index out of range");
  switch (kind) {
    case GroupKind::Cyclic:
      return a == 0 ? 0 : modulus - a;
    case GroupKind::Binary:
      return a;
    case GroupKind::Product: {
      const std::uint64_t mask = (std::uint64_t{1} << exponent) - 1;
      const std::uint64_t x = a >> exponent;
      return ((x == 0 ? 0 : modulus - x) << exponent) | (a & mask);
    }
  }
  return 0;
}

std::uint64_t GroupSpec::sum(std::span<const std::uint64_t> elems) const {
  std::uint64_t acc = 0;
  for (std::uint64_t e : elems) acc = add(acc, e);
  return acc;
}

std::string GroupSpec::token() const {
  switch (kind) {
    case GroupKind::Cyclic:
      return "Z" + std::to_string(modulus);
    case GroupKind::Binary:
      return "Z2^" + std::to_string(exponent);
    case GroupKind::Product:
      return "Z" + std::to_string(modulus) + "xZ2^" + std::to_string(exponent);
  }
  return {};
}

std::optional<std::uint64_t> parse_uint_strict(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.size() > 1 && text.front() == '0') return std::nullopt;
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
      return std::nullopt;
    value = value * 10 + digit;
  }
  return value;
}

std::optional<GroupSpec> GroupSpec::parse_token(std::string_view token) {
  const auto parse_exponent = [](std::string_view text) -> std::optional<std::uint32_t> {
    auto d = parse_uint_strict(text);
    if (!d || *d == 0 || *d >= 64) return std::nullopt;
    return static_cast<std::uint32_t>(*d);
  };

  if (token.starts_with("Z2^")) {
    auto d = parse_exponent(token.substr(3));
    if (!d) return std::nullopt;
    return binary(*d);
  }
  if (!token.starts_with("Z")) return std::nullopt;
  const auto x = token.find("xZ2^");
  if (x != std::string_view::npos) {
    auto m = parse_uint_strict(token.substr(1, x - 1));
    auto d = parse_exponent(token.substr(x + 4));
    if (!m || *m == 0 || !d) return std::nullopt;
    if (*m > (std::numeric_limits<std::uint64_t>::max() >> *d)) return std::nullopt;
    return product(*m, *d);
  }
  auto n = parse_uint_strict(token.substr(1));
  if (!n || *n == 0) return std::nullopt;
  return cyclic(*n);
}

}  // namespace steiner
