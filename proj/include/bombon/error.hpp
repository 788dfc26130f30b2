#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bombon {

enum class ErrorCode {
  ZeroVector,
  CoincidentPoints,
  DimensionMismatch,
  NoConvergence,
  NotABombon,
  TypeMismatch,
  NotComplementary,
  NotOnQuadric,
  NotSmooth,
  PreconditionViolated,
  ExpectationViolated,
  PointOnCircle,
  DegenerateSpan,
  OracleInconsistent,
  NotOnSphere,
  BadInput,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bombon
