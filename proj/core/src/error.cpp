#include "mec/error.hpp"

namespace mec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::NegativeAlpha: return "NegativeAlpha";
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace mec
