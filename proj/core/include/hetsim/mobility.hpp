#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hetsim/geometry.hpp"
#include "hetsim/random.hpp"
#include "hetsim/topology.hpp"

namespace hetsim {

enum class UserKind { kUniform, kHotspot };

std::string_view to_string(UserKind kind);

struct WorkSchedule {
  std::vector<int> start_slots{0, 42, 83};
  int duration = 375;

  bool operator==(const WorkSchedule&) const = default;
};

enum class HotspotPlacement {
  kCommute,  // start anywhere in the macro cell, walk to the pico at work start
  kInCell,   // start inside the assigned pico, already at work (one-slot runs)
};

// Speeds in meters per slot.
struct MobilityParams {
  double roam_speed_min = 10.0;
  double roam_speed_max = 20.0;
  double dwell_speed_min = 0.0;
  double dwell_speed_max = 2.0;
  HotspotPlacement hotspot_placement = HotspotPlacement::kCommute;

  bool operator==(const MobilityParams&) const = default;
};

struct Velocity {
  double vx = 0.0;
  double vy = 0.0;
};

struct UserState {
  int id = 0;
  UserKind kind = UserKind::kUniform;
  Point2D pos;
  Point2D dest;
  double speed = 0.0;
  Velocity velocity;
  std::optional<int> my_pico;
  std::optional<int> work_start;
  int work_len = 0;
  bool active = false;

  bool at_work(int slot) const noexcept {
    return work_start && slot >= *work_start && slot < *work_start + work_len;
  }
};

struct ActivityParams {
  double uniform_prob = 0.4;
  double hotspot_prob = 0.8;

  bool operator==(const ActivityParams&) const = default;
};

// Throws kNoPicosForHotspot for a hotspot user on a pico-less layout.
UserState init_user(int id, UserKind kind, const Topology& topology, const WorkSchedule& schedule,
                    const MobilityParams& params, Rng& rng);

/// One slot of waypoint motion with work-time retargeting.
///
/// Order: work start retargets into the home pico, work end retargets into the
/// macro cell, then the user advances one step. A user within one step of its
/// destination snaps onto it and picks the next waypoint (inside the home pico
/// at dwell speed while at work, otherwise anywhere in the macro cell).
UserState step_user(UserState user, int slot, const Topology& topology, const MobilityParams& params,
                    Rng& rng);

// Bernoulli draw; consumes exactly one uniform variate.
bool draw_activity(const UserState& user, bool inside_pico, const ActivityParams& params, Rng& rng);

}  // namespace hetsim
