#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "steiner/constructions.hpp"
#include "steiner/group.hpp"
#include "steiner/hypergraph.hpp"

namespace steiner {

// Edge-list file, version 1. Two header lines, then one edge per line:
//
//   # steiner-sparse v1
//   # r=<r> n=<n> construction=<mod-sum|binary|product|external> group=<token|none>
//   <v1> <v2> ... <vr>
//
// Body lines are r space-separated ascending decimal vertex indices, sorted
// lexicographically, newline-terminated, no trailing whitespace. Reading is
// strict enough that read/write round-trips are byte-identical.
struct EdgeList {
  Hypergraph graph;
  ConstructionName construction = ConstructionName::External;
  std::optional<GroupSpec> group;  // nullopt renders as "none"
};

std::string write_edge_list(const EdgeList& list);
void write_edge_list_file(const std::filesystem::path& path, const EdgeList& list);

// Throws FormatError (with a 1-based line number) on malformed input.
EdgeList read_edge_list(std::string_view text);
EdgeList read_edge_list_file(const std::filesystem::path& path);

}  // namespace steiner
