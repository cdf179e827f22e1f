#include "pgcanon/error.hpp"

namespace pgc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotAPermutationGraph: return "NotAPermutationGraph";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::EvaluationOutsideSource: return "EvaluationOutsideSource";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::SourceMismatch: return "SourceMismatch";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::NonPowerOrder: return "NonPowerOrder";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::WrongEnumerationLength: return "WrongEnumerationLength";
    case ErrorCode::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::OverlappingClasses: return "OverlappingClasses";
    case ErrorCode::UncoveredPoint: return "UncoveredPoint";
    case ErrorCode::NotBlockDiagonal: return "NotBlockDiagonal";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyCompatibleSet: return "EmptyCompatibleSet";
    case ErrorCode::RefinementBrokeTransitivity: return "RefinementBrokeTransitivity";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPowerOrder:
    case ErrorCode::EmptyCompatibleSet:
    case ErrorCode::InvariantViolation:
      return true;
    default:
      return false;
  }
}

}  // namespace pgc
