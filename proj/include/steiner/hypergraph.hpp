#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace steiner {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// An r-uniform hypergraph on vertex set [0, n). Every edge is a strictly
// increasing r-tuple; the edge list is kept in lexicographic order with no
// duplicates, so equal edge sets serialize identically regardless of how
// they were assembled.
class Hypergraph {
 public:
  Hypergraph(std::uint32_t r, std::uint32_t n);

  // Validates and canonicalizes: sorts each edge, sorts the edge list.
  // Duplicate edges, repeated vertices, wrong arity or out-of-range
  // vertices throw UsageError.
  static Hypergraph from_edges(std::uint32_t r, std::uint32_t n,
                               const std::vector<std::vector<Vertex>>& edges);

  // Adopts a flat r*count buffer that is already canonical. Full validation
  // is skipped; intended for construction code that emits in order.
  static Hypergraph from_canonical_flat(std::uint32_t r, std::uint32_t n,
                                        std::vector<Vertex> flat);

  std::uint32_t uniformity() const { return r_; }
  std::uint32_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return flat_.size() / r_; }
  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * r_, r_};
  }
  std::span<const Vertex> flat() const { return flat_; }

  bool contains_edge(std::span<const Vertex> edge) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  std::uint32_t r_;
  std::uint32_t n_;
  std::vector<Vertex> flat_;
};

// Number of edges that contain all of `subset` (linear scan over the edge
// list). `subset` must hold distinct vertices < n, at most r of them.
std::uint64_t degree(const Hypergraph& h, std::span<const Vertex> subset);

// Index of every k-subset that occurs in some edge. Keys are strictly
// increasing k-tuples listed in lexicographic order; each bucket lists the
// positions of the edges containing the key, in increasing order.
class SubsetIndex {
 public:
  std::uint32_t subset_size() const { return k_; }
  // Number of distinct k-subsets occurring in edges.
  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const Vertex> key(std::size_t i) const {
    return {keys_.data() + i * k_, k_};
  }
  std::span<const EdgeId> edges_of(std::size_t i) const {
    return {edge_ids_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::optional<std::size_t> find(std::span<const Vertex> subset) const;
  std::uint64_t degree(std::span<const Vertex> subset) const;
  // Total (key, edge) incidences: edge_count * C(r, k).
  std::uint64_t total_entries() const { return edge_ids_.size(); }

 private:
  friend SubsetIndex build_index(const Hypergraph&, std::uint32_t, unsigned);
  std::uint32_t k_ = 0;
  std::vector<Vertex> keys_;
  std::vector<std::uint64_t> offsets_;
  std::vector<EdgeId> edge_ids_;
};

// Complete k-subset index of h, 1 <= k <= r. Deterministic regardless of
// thread count.
SubsetIndex build_index(const Hypergraph& h, std::uint32_t k,
                        unsigned threads = 0);

// Number of distinct k-subsets of vertices occurring in at least one edge,
// computed without retaining per-key edge lists.
std::uint64_t occupied_subset_count(const Hypergraph& h, std::uint32_t k,
                                    unsigned threads = 0);

}  // namespace steiner
