#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpdel {

/// Malformed input in the edge-list text format. Carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The hole-structure machinery found a configuration that cannot occur in a
/// connected almost bipartite permutation graph around a shortest hole.
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A post-condition re-check failed. Indicates a bug, not bad input.
class DiagnosticFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force oracle refuses graphs above its size guard.
class OracleLimitExceeded : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// A seeded generator exhausted its resampling budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bpdel
