#include "coalescent/errors.hpp"

namespace coalescent {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorCode::SimplexNotInComplex: return "SimplexNotInComplex";
    case ErrorCode::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::NonSimplicialQuotient: return "NonSimplicialQuotient";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ApexCollision: return "ApexCollision";
    case ErrorCode::NotAFreeFace: return "NotAFreeFace";
    case ErrorCode::StarTooLarge: return "StarTooLarge";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::TerminalNotAPoint: return "TerminalNotAPoint";
    case ErrorCode::PointNotInComplex: return "PointNotInComplex";
    case ErrorCode::UnsortedTimes: return "UnsortedTimes";
    case ErrorCode::StageOutOfRange: return "StageOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::BuildDefect: return "BuildDefect";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace coalescent
