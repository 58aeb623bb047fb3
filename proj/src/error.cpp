#include "circent/error.hpp"

namespace circent {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonUnimodularRoot: return "NonUnimodularRoot";
    case ErrorKind::ZeroLeading: return "ZeroLeading";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::NotSelfInversive: return "NotSelfInversive";
    case ErrorKind::InconsistentReflection: return "InconsistentReflection";
    case ErrorKind::SeparationFailure: return "SeparationFailure";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::RootsOffCircle: return "RootsOffCircle";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace circent
