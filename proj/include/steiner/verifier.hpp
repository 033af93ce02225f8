#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "steiner/hypergraph.hpp"

namespace steiner {

// F_r(v, e): all r-graphs with e edges spanning at most v vertices.
// A host graph is free of the family iff no e of its edges have a union
// of size <= v.
struct ForbiddenFamily {
  std::uint32_t max_vertices = 0;  // v
  std::uint32_t edge_count = 0;    // e

  bool operator==(const ForbiddenFamily&) const = default;
};

struct CheckOptions {
  unsigned threads = 0;
  // Certificates retained in a report; all violations are still counted.
  std::uint32_t certificate_cap = 100;
};

struct ViolationReport {
  ForbiddenFamily family;
  std::uint64_t violations = 0;
  std::uint32_t certificate_cap = 0;
  // Lexicographically smallest certificates, each a sorted tuple of edge
  // positions whose union spans at most family.max_vertices vertices.
  std::vector<std::vector<EdgeId>> certificates;

  bool pass() const { return violations == 0; }
};

// F_r(r+1, 2)-freeness: certificates are the pairs of edges sharing an
// (r-1)-subset, i.e. the (r-1)-subsets of degree >= 2.
ViolationReport check_linear(const Hypergraph& h, const CheckOptions& opts = {});

// F_r(r+2, 3)-freeness: certificates are the unordered triples of edges
// spanning at most r+2 vertices. Candidate pairs are pruned through the
// (r-2)-subset index: |A u B| <= r+2 iff |A n B| >= r-2.
ViolationReport check_sparse3(const Hypergraph& h, const CheckOptions& opts = {});

// Generic family check: depth-first extension over the edge list pruned on
// the running union size. Output is identical to naive_check.
ViolationReport check_forbidden(const Hypergraph& h, ForbiddenFamily family,
                                const CheckOptions& opts = {});

// Plain enumeration of all e-subsets of the edge list. Refuses to run when
// the number of e-subsets exceeds `max_subsets` (0 = default budget, see
// naive_check_budget()).
ViolationReport naive_check(const Hypergraph& h, ForbiddenFamily family,
                            std::uint64_t max_subsets = 0,
                            std::uint32_t certificate_cap = 100);

// Default budget for naive_check and other exhaustive enumerations;
// overridable with the STEINER_SPARSE_NAIVE_BUDGET environment variable.
std::uint64_t naive_check_budget();

struct SearchResult {
  std::uint64_t max_edges = 0;
  Hypergraph witness;
};

// Exact extremal edge count over all hypergraphs on n vertices free of all
// given families, by branch-and-bound over candidate edges in lexicographic
// order. Guarded: refuses when C(n, r) exceeds `max_candidates`
// (0 = default guard, see max_search_guard()).
SearchResult max_search(std::uint32_t r, std::uint32_t n,
                        std::span<const ForbiddenFamily> families,
                        std::uint64_t max_candidates = 0);

// Default candidate-edge guard for max_search; overridable with the
// STEINER_SPARSE_SEARCH_GUARD environment variable.
std::uint64_t max_search_guard();

}  // namespace steiner
