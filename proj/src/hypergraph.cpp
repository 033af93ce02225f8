#include "steiner/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "steiner/errors.hpp"
#include "steiner/parallel.hpp"

namespace steiner {

namespace {

// Walks k-subsets of [0, r) as position tuples, in lexicographic order.
struct CombinationWalker {
  std::uint32_t r, k;
  std::array<std::uint32_t, 64> pos{};

  explicit CombinationWalker(std::uint32_t r, std::uint32_t k) : r(r), k(k) {
    for (std::uint32_t i = 0; i < k; ++i) pos[i] = i;
  }
  bool advance() {
    std::uint32_t i = k;
    while (i > 0) {
      --i;
      if (pos[i] + (k - i) < r) {
        ++pos[i];
        for (std::uint32_t j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
        return true;
      }
    }
    return false;
  }
};

std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::uint32_t vertex_bits(std::uint32_t n) {
  return n <= 1 ? 1 : std::bit_width(n - 1);
}

}  // namespace

Hypergraph::Hypergraph(std::uint32_t r, std::uint32_t n) : r_(r), n_(n) {
  if (r < 2) throw UsageError("uniformity must be at least 2");
  if (n < r) throw UsageError("vertex count must be at least the uniformity");
}

Hypergraph Hypergraph::from_edges(std::uint32_t r, std::uint32_t n,
                                  const std::vector<std::vector<Vertex>>& edges) {
  Hypergraph h(r, n);
  std::vector<std::vector<Vertex>> sorted;
  sorted.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.size() != r) throw UsageError("edge does not have exactly r vertices");
    std::vector<Vertex> s(e);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw UsageError("edge has repeated vertices");
    if (s.back() >= n) throw UsageError("vertex index out of range");
    sorted.push_back(std::move(s));
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw UsageError("duplicate edge");
  h.flat_.reserve(sorted.size() * r);
  for (const auto& s : sorted) h.flat_.insert(h.flat_.end(), s.begin(), s.end());
  return h;
}

Hypergraph Hypergraph::from_canonical_flat(std::uint32_t r, std::uint32_t n,
                                           std::vector<Vertex> flat) {
  Hypergraph h(r, n);
  if (flat.size() % r != 0) throw UsageError("flat edge buffer not a multiple of r");
  const std::size_t count = flat.size() / r;
  for (std::size_t i = 0; i < count; ++i) {
    const Vertex* e = flat.data() + i * r;
    for (std::uint32_t j = 1; j < r; ++j)
      if (e[j - 1] >= e[j]) throw UsageError("edge vertices not strictly increasing");
    if (e[r - 1] >= n) throw UsageError("vertex index out of range");
    if (i > 0) {
      const Vertex* p = e - r;
      if (!std::lexicographical_compare(p, p + r, e, e + r))
        throw UsageError("edge list not in strict lexicographic order");
    }
  }
  h.flat_ = std::move(flat);
  return h;
}

bool Hypergraph::contains_edge(std::span<const Vertex> edge) const {
  if (edge.size() != r_) return false;
  const std::size_t count = edge_count();
  std::size_t lo = 0, hi = count;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (lex_less(this->edge(mid), edge))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < count &&
         std::equal(edge.begin(), edge.end(), this->edge(lo).begin());
}

std::uint64_t degree(const Hypergraph& h, std::span<const Vertex> subset) {
  if (subset.size() > h.uniformity())
    throw UsageError("subset larger than the uniformity");
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw UsageError("subset has repeated vertices");
  if (!s.empty() && s.back() >= h.vertex_count())
    throw UsageError("vertex index out of range");

  std::uint64_t count = 0;
  const std::size_t edges = h.edge_count();
  for (std::size_t i = 0; i < edges; ++i) {
    const auto e = h.edge(i);
    std::size_t j = 0;
    for (Vertex v : e) {
      if (j < s.size() && s[j] == v) ++j;
    }
    if (j == s.size()) ++count;
  }
  return count;
}

std::optional<std::size_t> SubsetIndex::find(std::span<const Vertex> subset) const {
  if (subset.size() != k_) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (lex_less(key(mid), subset))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(subset.begin(), subset.end(), key(lo).begin()))
    return lo;
  return std::nullopt;
}

std::uint64_t SubsetIndex::degree(std::span<const Vertex> subset) const {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (s.size() != k_) throw UsageError("subset size does not match the index");
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw UsageError("subset has repeated vertices");
  const auto where = find(s);
  return where ? edges_of(*where).size() : 0;
}

namespace {

// (packed key, edge) entries for every k-subset of every edge; keys pack
// MSB-first so numeric order equals lexicographic tuple order.
struct PackedEntry {
  std::uint64_t key;
  EdgeId edge;
  bool operator<(const PackedEntry& o) const {
    return key != o.key ? key < o.key : edge < o.edge;
  }
};

std::vector<PackedEntry> packed_entries(const Hypergraph& h, std::uint32_t k,
                                        unsigned threads) {
  const std::uint32_t bits = vertex_bits(h.vertex_count());
  const std::uint64_t per_edge = small_binomial(h.uniformity(), k);
  const std::size_t edges = h.edge_count();
  std::vector<PackedEntry> entries(per_edge * edges);
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (edges + kChunk - 1) / kChunk;
  for_each_slot(chunks, threads, [&](std::uint64_t c) {
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min<std::size_t>(begin + kChunk, edges);
    std::size_t out = begin * per_edge;
    for (std::size_t i = begin; i < end; ++i) {
      const auto e = h.edge(i);
      CombinationWalker walk(h.uniformity(), k);
      do {
        std::uint64_t key = 0;
        for (std::uint32_t j = 0; j < k; ++j)
          key = (key << bits) | e[walk.pos[j]];
        entries[out++] = {key, static_cast<EdgeId>(i)};
      } while (walk.advance());
    }
  });
  return entries;
}

void unpack_key(std::uint64_t key, std::uint32_t k, std::uint32_t bits,
                Vertex* out) {
  const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << bits) - 1;
  for (std::uint32_t j = 0; j < k; ++j)
    out[k - 1 - j] = static_cast<Vertex>((key >> (j * bits)) & mask);
}

// Fallback when k*bits exceeds 64: materialized keys plus an index sort.
struct GenericEntries {
  std::vector<Vertex> keys;          // k per entry
  std::vector<std::uint64_t> order;  // entry ids sorted by (key, entry)
};

GenericEntries generic_entries(const Hypergraph& h, std::uint32_t k,
                               unsigned threads) {
  const std::uint64_t per_edge = small_binomial(h.uniformity(), k);
  const std::size_t edges = h.edge_count();
  GenericEntries g;
  g.keys.resize(per_edge * edges * k);
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (edges + kChunk - 1) / kChunk;
  for_each_slot(chunks, threads, [&](std::uint64_t c) {
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min<std::size_t>(begin + kChunk, edges);
    std::size_t out = begin * per_edge * k;
    for (std::size_t i = begin; i < end; ++i) {
      const auto e = h.edge(i);
      CombinationWalker walk(h.uniformity(), k);
      do {
        for (std::uint32_t j = 0; j < k; ++j) g.keys[out++] = e[walk.pos[j]];
      } while (walk.advance());
    }
  });
  g.order.resize(per_edge * edges);
  std::iota(g.order.begin(), g.order.end(), 0);
  std::sort(g.order.begin(), g.order.end(),
            [&](std::uint64_t a, std::uint64_t b) {
              const Vertex* ka = g.keys.data() + a * k;
              const Vertex* kb = g.keys.data() + b * k;
              for (std::uint32_t j = 0; j < k; ++j) {
                if (ka[j] != kb[j]) return ka[j] < kb[j];
              }
              return a < b;
            });
  return g;
}

}  // namespace

SubsetIndex build_index(const Hypergraph& h, std::uint32_t k, unsigned threads) {
  if (k < 1 || k > h.uniformity())
    throw UsageError("subset size must be in [1, r]");
  SubsetIndex index;
  index.k_ = k;
  const std::uint32_t bits = vertex_bits(h.vertex_count());
  const bool packable = static_cast<std::uint64_t>(k) * bits <= 64;

  const auto emit = [&](std::span<const Vertex> key, EdgeId edge) {
    if (index.offsets_.empty() ||
        !std::equal(key.begin(), key.end(),
                    index.keys_.end() - static_cast<std::ptrdiff_t>(k))) {
      index.offsets_.push_back(index.edge_ids_.size());
      index.keys_.insert(index.keys_.end(), key.begin(), key.end());
    }
    index.edge_ids_.push_back(edge);
  };

  if (packable) {
    auto entries = packed_entries(h, k, threads);
    std::sort(entries.begin(), entries.end());
    std::array<Vertex, 64> buf;
    std::uint64_t prev_key = 0;
    bool first = true;
    for (const auto& entry : entries) {
      if (first || entry.key != prev_key) {
        unpack_key(entry.key, k, bits, buf.data());
        index.offsets_.push_back(index.edge_ids_.size());
        index.keys_.insert(index.keys_.end(), buf.data(), buf.data() + k);
        prev_key = entry.key;
        first = false;
      }
      index.edge_ids_.push_back(entry.edge);
    }
  } else {
    auto g = generic_entries(h, k, threads);
    const std::uint64_t per_edge = small_binomial(h.uniformity(), k);
    for (std::uint64_t entry : g.order) {
      const EdgeId edge = static_cast<EdgeId>(entry / per_edge);
      emit({g.keys.data() + entry * k, k}, edge);
    }
  }
  if (!index.offsets_.empty()) index.offsets_.push_back(index.edge_ids_.size());
  return index;
}

std::uint64_t occupied_subset_count(const Hypergraph& h, std::uint32_t k,
                                    unsigned threads) {
  if (k < 1 || k > h.uniformity())
    throw UsageError("subset size must be in [1, r]");
  if (h.edge_count() == 0) return 0;
  const std::uint32_t bits = vertex_bits(h.vertex_count());
  if (static_cast<std::uint64_t>(k) * bits <= 64) {
    // Keys only; cheaper than a full index for large graphs.
    const std::uint64_t per_edge = small_binomial(h.uniformity(), k);
    const std::size_t edges = h.edge_count();
    std::vector<std::uint64_t> keys(per_edge * edges);
    constexpr std::uint64_t kChunk = 4096;
    const std::uint64_t chunks = (edges + kChunk - 1) / kChunk;
    for_each_slot(chunks, threads, [&](std::uint64_t c) {
      const std::size_t begin = c * kChunk;
      const std::size_t end = std::min<std::size_t>(begin + kChunk, edges);
      std::size_t out = begin * per_edge;
      for (std::size_t i = begin; i < end; ++i) {
        const auto e = h.edge(i);
        CombinationWalker walk(h.uniformity(), k);
        do {
          std::uint64_t key = 0;
          for (std::uint32_t j = 0; j < k; ++j)
            key = (key << bits) | e[walk.pos[j]];
          keys[out++] = key;
        } while (walk.advance());
      }
    });
    std::sort(keys.begin(), keys.end());
    return static_cast<std::uint64_t>(
        std::unique(keys.begin(), keys.end()) - keys.begin());
  }
  return build_index(h, k, threads).size();
}

}  // namespace steiner
