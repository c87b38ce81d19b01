#include "hetsim/activity_control.hpp"

#include "hetsim/errors.hpp"

namespace hetsim {

ThresholdPolicy ThresholdPolicy::one_threshold(int threshold) {
  if (threshold < 0) throw Error(ErrorCode::kInvalidPolicy, "threshold must be non-negative");
  return ThresholdPolicy(threshold, std::nullopt);
}

ThresholdPolicy ThresholdPolicy::two_threshold(int t_activate, int t_deactivate) {
  if (t_activate < 0 || t_deactivate < 0) throw Error(ErrorCode::kInvalidPolicy, "thresholds must be non-negative");
  if (t_deactivate >= t_activate) {
    throw Error(ErrorCode::kInvalidPolicy, "t_deactivate (" + std::to_string(t_deactivate) +
                                               ") must be below t_activate (" + std::to_string(t_activate) + ")");
  }
  return ThresholdPolicy(t_activate, t_deactivate);
}

PicoControlState step_state(PicoControlState state, int active_users_in_range, const ThresholdPolicy& policy,
                            int boot_slots) {
  switch (state.mode) {
    case EnbMode::kSleep:
      if (policy.should_activate(active_users_in_range)) {
        if (boot_slots <= 0) return {EnbMode::kActive, 0};
        return {EnbMode::kBoot, boot_slots};
      }
      return state;
    case EnbMode::kBoot:
      if (--state.boot_remaining <= 0) return {EnbMode::kActive, 0};
      return state;
    case EnbMode::kActive:
      if (policy.should_deactivate(active_users_in_range)) return {EnbMode::kSleep, 0};
      return state;
  }
  return state;
}

int count_active_in_range(const Cell& pico, std::span<const UserState> users) {
  int count = 0;
  for (const UserState& user : users) {
    if (user.active && distance(user.pos, pico.center) < pico.radius) ++count;
  }
  return count;
}

}  // namespace hetsim
