#include "bombon/error.hpp"

namespace bombon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotABombon: return "NotABombon";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::NotOnQuadric: return "NotOnQuadric";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ExpectationViolated: return "ExpectationViolated";
    case ErrorCode::PointOnCircle: return "PointOnCircle";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::OracleInconsistent: return "OracleInconsistent";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace bombon
