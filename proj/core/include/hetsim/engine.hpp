#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hetsim/activity_control.hpp"
#include "hetsim/channel.hpp"
#include "hetsim/mobility.hpp"
#include "hetsim/power.hpp"
#include "hetsim/topology.hpp"

namespace hetsim {

// Serving layers. The MoNetWith* kinds move users over a donor COE/UDC layout
// (same seed, same trajectories) while only the macro serves.
enum class NetworkKind { kMoNet, kCoe, kUdc, kMoNetWithCoeUsers, kMoNetWithUdcUsers };

std::string_view to_string(NetworkKind kind);
std::optional<NetworkKind> network_kind_from_string(std::string_view name);

struct Scenario {
  NetworkKind topology = NetworkKind::kUdc;
  int n_users = 1000;
  int n_hotspot = 0;
  int n_picos = 28;
  double macro_radius = 500.0;
  double pico_radius = 50.0;
  ThresholdPolicy policy = ThresholdPolicy::one_threshold(5);
  int boot_slots = 1;
  int slots = 1000;
  int realizations = 1;
  std::uint64_t seed = 1;
  double slot_duration = 1.0;
  ActivityParams activity;
  MobilityParams mobility;
  WorkSchedule schedule;
  ChannelParams channel;
  PowerParams macro_power = PowerParams::macro_defaults();
  PowerParams pico_power = PowerParams::pico_defaults();
  bool legacy_mode = false;
  FreeSpaceParams legacy_macro = FreeSpaceParams::macro_defaults();
  FreeSpaceParams legacy_pico = FreeSpaceParams::pico_defaults();

  bool operator==(const Scenario&) const = default;
};

// Throws kValidationError naming the offending key.
void validate(const Scenario& scenario);

// Layout users move over; the donor layout for MoNetWith* kinds.
Topology build_layout(const Scenario& scenario);

struct SlotMetrics {
  int slot = 0;
  double total_capacity = 0.0;  // bits/s
  double total_power = 0.0;     // W
  double ee = 0.0;              // bits/J
  int n_active_picos = 0;
  int n_macro_served_active = 0;
  int n_pico_served_active = 0;
  // Pico layer alone ("without macro" view).
  double pico_capacity = 0.0;
  double pico_power = 0.0;
};

enum class ServingKind { kIdle, kMacro, kPico };

struct UserSlotRecord {
  int user_id = 0;
  ServingKind serving = ServingKind::kIdle;
  int pico_id = -1;
  double capacity = 0.0;
};

struct SlotResult {
  SlotMetrics metrics;
  std::vector<UserSlotRecord> users;
};

// capacity / power; throws kZeroPower when power == 0.
double compute_ee(double total_capacity, double total_power);

/// One independent realization: layout, users with private random streams,
/// and pico controllers. Each slot runs mobility, activity, threshold control,
/// association, link evaluation and power accounting in that order.
class World {
 public:
  World(const Scenario& scenario, int realization);

  SlotResult run_slot(int slot);

  const Scenario& scenario() const noexcept { return scenario_; }
  const Topology& layout() const noexcept { return layout_; }
  bool picos_serve() const noexcept { return picos_serve_; }
  std::span<const UserState> users() const noexcept { return users_; }
  std::span<const PicoControlState> pico_states() const noexcept { return pico_states_; }

 private:
  Scenario scenario_;
  Topology layout_;
  bool picos_serve_;
  double bandwidth_share_;
  std::vector<UserState> users_;
  std::vector<Rng> user_rngs_;
  std::vector<PicoControlState> pico_states_;
  std::vector<std::optional<int>> containing_;
  std::vector<int> pico_counts_;
  std::vector<int> pico_served_;
};

// Fixed-width histogram over [lo, hi); samples >= hi land in overflow.
struct Histogram {
  double lo = 0.0;
  double hi = 1e6;
  double bin_width = 1e4;
  std::vector<std::uint64_t> counts = std::vector<std::uint64_t>(100, 0);
  std::uint64_t underflow = 0;
  std::uint64_t overflow = 0;

  void add(double value);
  void merge(const Histogram& other);
  std::uint64_t total() const;
  // Lower edge of the most populated bin (first one on ties).
  double mode_lower_edge() const;
};

struct SlotSummary {
  int slot = 0;
  double n_active_picos = 0.0;
  double macro_active_users = 0.0;
  double pico_active_users = 0.0;
  double capacity_bps = 0.0;
  double power_w = 0.0;
  double ee_bits_per_joule = 0.0;
  double pico_capacity_bps = 0.0;
  double pico_power_w = 0.0;
  double pico_ee_bits_per_joule = 0.0;
};

struct UserAggregate {
  int user_id = 0;
  UserKind kind = UserKind::kUniform;
  double rate_sum = 0.0;
  std::int64_t active_slots = 0;
  std::int64_t pico_slots = 0;

  double mean_rate() const { return active_slots > 0 ? rate_sum / static_cast<double>(active_slots) : 0.0; }
  double frac_slots_on_pico() const {
    return active_slots > 0 ? static_cast<double>(pico_slots) / static_cast<double>(active_slots) : 0.0;
  }
};

struct ScenarioResult {
  // Per-slot means across realizations.
  std::vector<SlotSummary> trace;
  // Per user id, accumulated over all realizations.
  std::vector<UserAggregate> users;
  // Per-(user, slot) capacities of active users.
  Histogram rate_histogram;
  // Per-(realization, user) mean rate over active slots.
  Histogram user_mean_histogram;
  double max_user_mean_rate = 0.0;
  // Statistics over every (realization, slot) sample.
  double ee_mean = 0.0;
  double ee_std = 0.0;
  double capacity_mean = 0.0;
  double power_mean = 0.0;
  double active_picos_mean = 0.0;
  double pico_capacity_mean = 0.0;
  double pico_power_mean = 0.0;
  double pico_ee_mean = 0.0;
  double pico_ee_std = 0.0;
};

using SlotObserver = std::function<void(int realization, int slot, const World& world, const SlotResult& result)>;

struct RunOptions {
  // Invoked for realization 0 only, in slot order.
  SlotObserver observer;
  // 0 = hardware concurrency. Results do not depend on the thread count.
  int threads = 0;
};

ScenarioResult run_scenario(const Scenario& scenario, const RunOptions& options = {});

}  // namespace hetsim
