#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgc {

enum class ErrorCode {
  // perm_core
  NotABijection,
  DomainMismatch,
  NotAPermutationGraph,
  // group_engine
  CapExceeded,
  // morphism_engine
  EvaluationOutsideSource,
  NonDivisible,
  SourceMismatch,
  NotAMorphism,
  // rank_mod_p
  NonPrimeModulus,
  NonPowerOrder,
  LengthMismatch,
  // abelian_canon
  NotAGroup,
  NotAbelian,
  NotTransitive,
  WrongEnumerationLength,
  EdgeOutOfRange,
  WrongClass,
  OverlappingClasses,
  UncoveredPoint,
  NotBlockDiagonal,
  IndexOutOfRange,
  EmptyCompatibleSet,
  RefinementBrokeTransitivity,
  InvariantViolation,
  // cli_io
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// True for codes that signal a broken internal invariant rather than bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pgc
