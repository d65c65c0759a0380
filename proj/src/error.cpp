#include "curveinv/error.hpp"

namespace curveinv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotConvenient: return "NotConvenient";
    case ErrorKind::TruncationTooShort: return "TruncationTooShort";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::NonUnimodularAdjacent: return "NonUnimodularAdjacent";
    case ErrorKind::BadBoundary: return "BadBoundary";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooFewCones: return "TooFewCones";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::IrrationalExceptionalPoint: return "IrrationalExceptionalPoint";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::BranchNotOnCurve: return "BranchNotOnCurve";
    case ErrorKind::NonIntegerDelta: return "NonIntegerDelta";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace curveinv
