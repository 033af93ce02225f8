#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steiner {

// Caller passed arguments outside an operation's contract.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the domain a construction is defined on
// (e.g. odd n for the mod-sum construction).
struct ConstructionDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// An exhaustive operation refused to run because it would exceed its budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed edge-list file; `line` is 1-based.
struct FormatError : std::runtime_error {
  FormatError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line) {}
  std::size_t line;
};

}  // namespace steiner
