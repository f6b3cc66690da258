#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpcolor {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  IndexOutOfRange,
  OverlappingSets,
  BadLength,
  InvalidRotation,
  NonPlanarEmbedding,
  Disconnected,
  ForbiddenCyclePresent,
  UnequalLists,
  BudgetExceeded,
  NotInList,
  PartialAssignment,
  EmptyList,
  ContractViolation,
  ListTooSmall,
  TheoremViolation,
  HypothesisViolated,
  GenerationExhausted,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::ForbiddenCyclePresent: return "ForbiddenCyclePresent";
    case ErrorKind::UnequalLists: return "UnequalLists";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotInList: return "NotInList";
    case ErrorKind::PartialAssignment: return "PartialAssignment";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::ListTooSmall: return "ListTooSmall";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI's exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dpcolor
