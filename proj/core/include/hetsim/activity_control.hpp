#pragma once

#include <limits>
#include <optional>
#include <span>

#include "hetsim/mobility.hpp"
#include "hetsim/power.hpp"
#include "hetsim/topology.hpp"

namespace hetsim {

/// Pico on/off thresholds on the number of active users inside the cell.
///
/// One threshold t: wake when count >= t, sleep when count < t.
/// Two thresholds (a, d) with d < a: wake when count >= a, sleep when
/// count <= d. Counts strictly between d and a leave the mode unchanged.
class ThresholdPolicy {
 public:
  // A threshold no count can reach; the pico never wakes.
  static constexpr int kNever = std::numeric_limits<int>::max();

  static ThresholdPolicy one_threshold(int threshold);
  // Throws kInvalidPolicy unless t_deactivate < t_activate.
  static ThresholdPolicy two_threshold(int t_activate, int t_deactivate);

  bool is_two_threshold() const noexcept { return t_deactivate_.has_value(); }
  int t_activate() const noexcept { return t_activate_; }
  std::optional<int> t_deactivate() const noexcept { return t_deactivate_; }

  bool should_activate(int count) const noexcept { return count >= t_activate_; }
  bool should_deactivate(int count) const noexcept {
    return t_deactivate_ ? count <= *t_deactivate_ : count < t_activate_;
  }

  bool operator==(const ThresholdPolicy&) const = default;

 private:
  ThresholdPolicy(int t_activate, std::optional<int> t_deactivate)
      : t_activate_(t_activate), t_deactivate_(t_deactivate) {}

  int t_activate_;
  std::optional<int> t_deactivate_;
};

struct PicoControlState {
  EnbMode mode = EnbMode::kSleep;
  int boot_remaining = 0;

  bool operator==(const PicoControlState&) const = default;
};

// Sleep -> Boot(boot_slots) -> Active -> Sleep. boot_slots == 0 wakes straight
// into Active in the same slot.
PicoControlState step_state(PicoControlState state, int active_users_in_range, const ThresholdPolicy& policy,
                            int boot_slots = 1);

int count_active_in_range(const Cell& pico, std::span<const UserState> users);

}  // namespace hetsim
