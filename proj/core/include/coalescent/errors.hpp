#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coalescent {

/// Stable, machine-readable failure codes. The CLI prints these verbatim.
enum class ErrorCode {
  DuplicateVertexInFacet,
  SimplexNotInComplex,
  DimensionTooHigh,
  NonSimplicialQuotient,
  InvalidParameter,
  ApexCollision,
  NotAFreeFace,
  StarTooLarge,
  NotSimplicial,
  NotConnected,
  InvalidSequence,
  TerminalNotAPoint,
  PointNotInComplex,
  UnsortedTimes,
  StageOutOfRange,
  ParseError,
  UnknownCommand,
  BuildDefect,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coalescent
