#include "steiner/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "steiner/counting.hpp"
#include "steiner/errors.hpp"
#include "steiner/parallel.hpp"

namespace steiner {

namespace {

constexpr std::uint32_t kMaxUniformity = 60;

// Enumerates (r-1)-subsets S of [0, n) in lexicographic order, maintaining
// the running group sum, and completes each with the unique vertex v that
// brings the total to the target. Emitting only when v > max(S) yields
// every edge exactly once, already in lexicographic order.
template <class Policy>
std::vector<Vertex> enumerate_completions(std::uint32_t r, std::uint64_t n,
                                          const Policy& policy,
                                          unsigned threads) {
  const std::uint32_t k = r - 1;
  const std::uint64_t slots = n - k + 1;
  std::vector<std::vector<Vertex>> slot_edges(slots);

  for_each_slot(slots, threads, [&](std::uint64_t first) {
    auto& out = slot_edges[first];
    std::array<Vertex, kMaxUniformity> chosen{};
    chosen[0] = static_cast<Vertex>(first);

    auto recurse = [&](auto&& self, std::uint32_t depth,
                       std::uint64_t sum) -> void {
      if (depth == k) {
        const std::uint64_t v = policy.complete(sum);
        if (v > chosen[k - 1] && v < n) {
          chosen[k] = static_cast<Vertex>(v);
          if (policy.accept(chosen.data(), r))
            out.insert(out.end(), chosen.data(), chosen.data() + r);
        }
        return;
      }
      const Vertex limit = static_cast<Vertex>(n - (k - depth));
      for (Vertex next = chosen[depth - 1] + 1; next <= limit; ++next) {
        chosen[depth] = next;
        self(self, depth + 1, policy.add(sum, next));
      }
    };
    recurse(recurse, 1, policy.add(0, static_cast<Vertex>(first)));
  });

  std::size_t total = 0;
  for (const auto& part : slot_edges) total += part.size();
  std::vector<Vertex> flat;
  flat.reserve(total);
  for (const auto& part : slot_edges)
    flat.insert(flat.end(), part.begin(), part.end());
  return flat;
}

struct ModSumPolicy {
  std::uint64_t n;
  std::uint64_t add(std::uint64_t acc, std::uint64_t v) const {
    return acc >= n - v ? acc - (n - v) : acc + v;
  }
  std::uint64_t complete(std::uint64_t sum) const {
    return (1 + n - sum) % n;
  }
  bool accept(const Vertex*, std::uint32_t) const { return true; }
};

struct BinaryPolicy {
  std::uint64_t add(std::uint64_t acc, std::uint64_t v) const { return acc ^ v; }
  std::uint64_t complete(std::uint64_t sum) const { return sum; }
  // A candidate edge sums to zero, so a zero-sum subset of size r-4 exists
  // iff its complementary 4-subset is zero-sum; checking 4-subsets covers
  // both forbidden sizes.
  bool accept(const Vertex* e, std::uint32_t r) const {
    for (std::uint32_t a = 0; a + 3 < r; ++a)
      for (std::uint32_t b = a + 1; b + 2 < r; ++b)
        for (std::uint32_t c = b + 1; c + 1 < r; ++c) {
          const Vertex abc = e[a] ^ e[b] ^ e[c];
          for (std::uint32_t f = c + 1; f < r; ++f)
            if ((abc ^ e[f]) == 0) return false;
        }
    return true;
  }
};

struct ProductPolicy {
  std::uint64_t m;
  std::uint32_t d;
  std::uint64_t ymask;
  const std::vector<std::uint64_t>* shadow_masks;        // d <= 6
  const std::vector<std::vector<Vertex>>* shadow_edges;  // d > 6

  std::uint64_t add(std::uint64_t acc, std::uint64_t v) const {
    const std::uint64_t ax = acc >> d, vx = v >> d;
    const std::uint64_t x = ax >= m - vx ? ax - (m - vx) : ax + vx;
    return (x << d) | ((acc ^ v) & ymask);
  }
  std::uint64_t complete(std::uint64_t sum) const {
    const std::uint64_t sx = sum >> d;
    return ((sx == 0 ? 0 : m - sx) << d) | (sum & ymask);
  }
  bool accept(const Vertex* e, std::uint32_t r) const {
    if (shadow_masks) {
      std::uint64_t mask = 0;
      for (std::uint32_t i = 0; i < r; ++i)
        mask |= std::uint64_t{1} << (e[i] & ymask);
      if (std::popcount(mask) != static_cast<int>(r)) return false;
      return std::binary_search(shadow_masks->begin(), shadow_masks->end(), mask);
    }
    std::vector<Vertex> shadow(r);
    for (std::uint32_t i = 0; i < r; ++i)
      shadow[i] = static_cast<Vertex>(e[i] & ymask);
    std::sort(shadow.begin(), shadow.end());
    if (std::adjacent_find(shadow.begin(), shadow.end()) != shadow.end())
      return false;
    return std::binary_search(shadow_edges->begin(), shadow_edges->end(), shadow);
  }
};

void require_vertex_range(std::uint64_t n) {
  if (n > std::numeric_limits<Vertex>::max())
    throw UsageError("vertex count exceeds the 32-bit vertex range");
}

}  // namespace

std::string construction_token(ConstructionName name) {
  switch (name) {
    case ConstructionName::ModSum:
      return "mod-sum";
    case ConstructionName::Binary:
      return "binary";
    case ConstructionName::Product:
      return "product";
    case ConstructionName::External:
      return "external";
  }
  return {};
}

std::optional<ConstructionName> parse_construction_token(std::string_view token) {
  if (token == "mod-sum") return ConstructionName::ModSum;
  if (token == "binary") return ConstructionName::Binary;
  if (token == "product") return ConstructionName::Product;
  if (token == "external") return ConstructionName::External;
  return std::nullopt;
}

Hypergraph build_mod_sum(std::uint64_t n, unsigned threads) {
  if (n < 4 || n % 2 != 0)
    throw ConstructionDomainError("the mod-sum construction requires even n >= 4");
  require_vertex_range(n);
  auto flat = enumerate_completions(4, n, ModSumPolicy{n}, threads);
  return Hypergraph::from_canonical_flat(4, static_cast<std::uint32_t>(n),
                                         std::move(flat));
}

Hypergraph build_binary(std::uint32_t r, std::uint32_t d, unsigned threads) {
  if (r <= 4)
    throw ConstructionDomainError("the binary construction requires r > 4");
  if (r > kMaxUniformity) throw UsageError("uniformity too large");
  if (d == 0 || d >= 32) throw UsageError("binary exponent must be in [1, 31]");
  const std::uint64_t n = std::uint64_t{1} << d;
  if (n < r)
    throw UsageError("the binary construction needs 2^d >= r vertices");
  auto flat = enumerate_completions(r, n, BinaryPolicy{}, threads);
  return Hypergraph::from_canonical_flat(r, static_cast<std::uint32_t>(n),
                                         std::move(flat));
}

Hypergraph build_product(std::uint32_t r, std::uint64_t m, std::uint32_t d,
                         unsigned threads) {
  if (m == 0) throw UsageError("product multiplier must be positive");
  if (m == 1) return build_binary(r, d, threads);
  Hypergraph shadow = build_binary(r, d, threads);
  const std::uint64_t n = m << d;
  require_vertex_range(n);

  ProductPolicy policy{m, d, (std::uint64_t{1} << d) - 1, nullptr, nullptr};
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<Vertex>> shadow_edges;
  if (d <= 6) {
    masks.reserve(shadow.edge_count());
    for (std::size_t i = 0; i < shadow.edge_count(); ++i) {
      std::uint64_t mask = 0;
      for (Vertex y : shadow.edge(i)) mask |= std::uint64_t{1} << y;
      masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());
    policy.shadow_masks = &masks;
  } else {
    shadow_edges.reserve(shadow.edge_count());
    for (std::size_t i = 0; i < shadow.edge_count(); ++i) {
      const auto e = shadow.edge(i);
      shadow_edges.emplace_back(e.begin(), e.end());
    }
    policy.shadow_edges = &shadow_edges;
  }

  auto flat = enumerate_completions(r, n, policy, threads);
  return Hypergraph::from_canonical_flat(r, static_cast<std::uint32_t>(n),
                                         std::move(flat));
}

ParamChoice select_params(std::uint32_t r, std::uint64_t n) {
  if (r <= 4)
    throw ConstructionDomainError("parameter selection applies to r > 4 only");
  const std::uint64_t root = isqrt(n);
  if (root == 0)
    throw ConstructionDomainError("n too small for parameter selection");
  const std::uint32_t d = static_cast<std::uint32_t>(std::bit_width(root) - 1);
  const std::uint64_t m = n >> d;
  const std::uint64_t n_used = m << d;
  if (d == 0 || m == 0 || n_used < r)
    throw ConstructionDomainError(
        "n too small for the product construction at r=" + std::to_string(r) +
        "; the smallest feasible n is " + std::to_string(minimal_auto_n(r)));
  return {d, m, n_used};
}

std::uint64_t minimal_auto_n(std::uint32_t r) {
  if (r <= 3) throw ConstructionDomainError("no construction for r <= 3");
  if (r == 4) return 4;
  // The shadow group needs 2^d >= r, and d grows with floor(log2 sqrt(n)).
  std::uint32_t d = 0;
  while ((std::uint64_t{1} << d) < r) ++d;
  return std::uint64_t{1} << (2 * d);
}

AutoBuild build_auto(std::uint32_t r, std::uint64_t n, unsigned threads) {
  if (r <= 3)
    throw ConstructionDomainError(
        "unsupported uniformity r=" + std::to_string(r) +
        ": constructions exist for r >= 4 only");
  if (r == 4) {
    const std::uint64_t used = n % 2 == 0 ? n : n - 1;
    if (n < 4 || used < 4)
      throw ConstructionDomainError("the mod-sum construction requires n >= 4");
    AutoBuild result{build_mod_sum(used, threads),
                     {ConstructionName::ModSum, GroupSpec::cyclic(used), 4, n, used}};
    return result;
  }
  const ParamChoice pc = select_params(r, n);
  if ((std::uint64_t{1} << pc.d) < r)
    throw ConstructionDomainError(
        "n too small for the product construction at r=" + std::to_string(r) +
        "; the smallest feasible n is " + std::to_string(minimal_auto_n(r)));
  Hypergraph graph = build_product(r, pc.m, pc.d, threads);
  ConstructionMeta meta{
      pc.m == 1 ? ConstructionName::Binary : ConstructionName::Product,
      pc.m == 1 ? GroupSpec::binary(pc.d) : GroupSpec::product(pc.m, pc.d), r, n,
      pc.n_used};
  return {std::move(graph), meta};
}

}  // namespace steiner
