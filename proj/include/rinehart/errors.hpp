#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rinehart {

enum class ErrorCode {
  RingMismatch,
  NotAUnit,
  InvalidRing,
  ArityMismatch,
  IndexOutOfRange,
  InvalidIdeal,
  IdealMismatch,
  SpaceMismatch,
  MetricNotMusical,
  NotEuclidean,
  TwoNotAUnit,
  NotTangent,
  CharTwoUnsupported,
  ParseError,
  ValidationError,
};

/// Stable identifier used in CLI output and JSON reports.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rinehart
