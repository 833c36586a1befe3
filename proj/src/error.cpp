#include "valab/error.hpp"

namespace valab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotLocal: return "NotLocal";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::OutOfWeightRange: return "OutOfWeightRange";
    case ErrorKind::NotSl2Triple: return "NotSl2Triple";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidLOne: return "InvalidLOne";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NoGenerator: return "NoGenerator";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::BetaZero: return "BetaZero";
    case ErrorKind::WindowOverflow: return "WindowOverflow";
    case ErrorKind::MissingGorensteinData: return "MissingGorensteinData";
  }
  return "Unknown";
}

}  // namespace valab
