#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mec {

enum class ErrorCode {
  NotNormalized,
  NegativeMass,
  NegativeAlpha,
  EmptyRow,
  EmptyInput,
  DimensionMismatch,
  TooLarge,
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised for every contract violation in the library. The code is stable and
/// intended for programmatic handling; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mec
