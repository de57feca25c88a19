#include "dmt/error.hpp"

namespace dmt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::MalformedSimplex: return "MalformedSimplex";
    case ErrorKind::SimplexNotInComplex: return "SimplexNotInComplex";
    case ErrorKind::TooLargeForEnumeration: return "TooLargeForEnumeration";
    case ErrorKind::MorseConditionViolated: return "MorseConditionViolated";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::AcyclicityBug: return "AcyclicityBug";
    case ErrorKind::ComplexMismatch: return "ComplexMismatch";
    case ErrorKind::NotFreeFace: return "NotFreeFace";
    case ErrorKind::CriticalValueInWindow: return "CriticalValueInWindow";
    case ErrorKind::ProofFailure: return "ProofFailure";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::NotACriticalVertex: return "NotACriticalVertex";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::ClosureViolated: return "ClosureViolated";
    case ErrorKind::DeformationViolated: return "DeformationViolated";
    case ErrorKind::NotLocalMinima: return "NotLocalMinima";
    case ErrorKind::NoPathExists: return "NoPathExists";
    case ErrorKind::ReassemblyFailure: return "ReassemblyFailure";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace dmt
