#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hetsim {

enum class ErrorCode {
  kRingOverflow,
  kPlacementFailure,
  kNonPositiveDistance,
  kZeroUsers,
  kNoPicosForHotspot,
  kInvalidPolicy,
  kZeroPower,
  kParseError,
  kValidationError,
  kUnknownPreset,
  kIoError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

  // Configuration problems (exit status 1) as opposed to runtime faults.
  bool is_config_error() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace hetsim
