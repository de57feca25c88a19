#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmt {

enum class ErrorKind {
  EmptyInput,
  MalformedSimplex,
  SimplexNotInComplex,
  TooLargeForEnumeration,
  MorseConditionViolated,
  MissingValue,
  AcyclicityBug,
  ComplexMismatch,
  NotFreeFace,
  CriticalValueInWindow,
  ProofFailure,
  PreconditionViolated,
  SignatureMismatch,
  NotACriticalVertex,
  PropertyViolation,
  EmptyFamily,
  TheoremViolation,
  ClosureViolated,
  DeformationViolated,
  NotLocalMinima,
  NoPathExists,
  ReassemblyFailure,
  Overflow,
  ParseError,
};

/// Stable machine-readable name, used in JSON error objects.
std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this type; `kind()` carries the
/// category and `what()` a human readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dmt
