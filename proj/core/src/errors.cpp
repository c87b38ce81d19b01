#include "hetsim/errors.hpp"

namespace hetsim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRingOverflow: return "RingOverflow";
    case ErrorCode::kPlacementFailure: return "PlacementFailure";
    case ErrorCode::kNonPositiveDistance: return "NonPositiveDistance";
    case ErrorCode::kZeroUsers: return "ZeroUsers";
    case ErrorCode::kNoPicosForHotspot: return "NoPicosForHotspot";
    case ErrorCode::kInvalidPolicy: return "InvalidPolicy";
    case ErrorCode::kZeroPower: return "ZeroPower";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kUnknownPreset: return "UnknownPreset";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

bool Error::is_config_error() const noexcept {
  switch (code_) {
    case ErrorCode::kParseError:
    case ErrorCode::kValidationError:
    case ErrorCode::kUnknownPreset:
    case ErrorCode::kInvalidPolicy:
    case ErrorCode::kNoPicosForHotspot:
      return true;
    default:
      return false;
  }
}

}  // namespace hetsim
