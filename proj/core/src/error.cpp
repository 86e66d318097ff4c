#include "locascope/error.hpp"

namespace locascope {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::RadiusMismatch: return "RadiusMismatch";
    case ErrorCode::VertexSetMismatch: return "VertexSetMismatch";
    case ErrorCode::ComponentTooLarge: return "ComponentTooLarge";
    case ErrorCode::WeightsNotNormalized: return "WeightsNotNormalized";
    case ErrorCode::NoMatchWithinTolerance: return "NoMatchWithinTolerance";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace locascope
