#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selmer {

enum class ErrorCode {
  SingularModel,
  NotSemistable,
  BadAtP,
  AdditiveReduction,
  BadReduction,
  EnumerationBoundExceeded,
  UnsupportedP,
  DegenerateExtension,
  NotNormalized,
  DivisionByEll,
  InvalidJump,
  HypothesisFailure,
  RangeTooLarge,
  PrecisionOverflow,
  InconclusivePrecision,
  PrecisionTooLow,
  TruncationTooSmall,
  UnsupportedTower,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace selmer
