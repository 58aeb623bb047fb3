#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circent {

enum class ErrorKind {
  NonUnimodularRoot,
  ZeroLeading,
  DegreeOverflow,
  NotSelfInversive,
  InconsistentReflection,
  SeparationFailure,
  ZeroConstantTerm,
  ZeroOnBoundary,
  ZeroPolynomial,
  IllConditioned,
  BudgetExceeded,
  NoConvergence,
  RootsOffCircle,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library failure tagged with its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace circent
