#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numrad {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  NoConvergence,
  Timeout,
  BadExponent,
  BadAlpha,
  NotUnit,
  NotABNormal,
  ParseError,
  DimensionMismatch,
  BadEnsemble,
  BadConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// NoConvergence and Timeout are numerical failures; everything else is an input problem.
  bool is_numerical() const noexcept {
    return code_ == ErrorCode::NoConvergence || code_ == ErrorCode::Timeout;
  }

 private:
  ErrorCode code_;
};

}  // namespace numrad
