#include "hetsim/mobility.hpp"

#include "hetsim/errors.hpp"

namespace hetsim {

std::string_view to_string(UserKind kind) { return kind == UserKind::kHotspot ? "hotspot" : "uniform"; }

namespace {

Velocity project(Point2D from, Point2D to, double speed) {
  const double len = distance(from, to);
  if (len == 0.0) return {};
  return {speed * (to.x - from.x) / len, speed * (to.y - from.y) / len};
}

void retarget(UserState& user, Point2D dest, double speed) {
  user.dest = dest;
  user.speed = speed;
  user.velocity = project(user.pos, dest, speed);
}

double roam_speed(const MobilityParams& p, Rng& rng) { return uniform_real(rng, p.roam_speed_min, p.roam_speed_max); }

double dwell_speed(const MobilityParams& p, Rng& rng) {
  return uniform_real(rng, p.dwell_speed_min, p.dwell_speed_max);
}

}  // namespace

UserState init_user(int id, UserKind kind, const Topology& topology, const WorkSchedule& schedule,
                    const MobilityParams& params, Rng& rng) {
  UserState user;
  user.id = id;
  user.kind = kind;
  user.work_len = schedule.duration;
  const Cell& macro = topology.macro();

  if (kind == UserKind::kHotspot) {
    if (topology.pico_count() == 0) {
      throw Error(ErrorCode::kNoPicosForHotspot, "hotspot user " + std::to_string(id) + " on a layout without picos");
    }
    user.my_pico = static_cast<int>(std::uniform_int_distribution<int>(0, topology.pico_count() - 1)(rng));
    if (params.hotspot_placement == HotspotPlacement::kInCell) {
      const Cell& home = topology.pico(*user.my_pico);
      user.work_start = 0;
      user.pos = sample_in_disc(home.center, home.radius, rng);
      retarget(user, sample_in_disc(home.center, home.radius, rng), dwell_speed(params, rng));
      return user;
    }
    const auto pick = std::uniform_int_distribution<std::size_t>(0, schedule.start_slots.size() - 1)(rng);
    user.work_start = schedule.start_slots[pick];
  }

  user.pos = sample_in_disc(macro.center, macro.radius, rng);
  retarget(user, sample_in_disc(macro.center, macro.radius, rng), roam_speed(params, rng));
  return user;
}

UserState step_user(UserState user, int slot, const Topology& topology, const MobilityParams& params, Rng& rng) {
  const Cell& macro = topology.macro();
  if (user.work_start) {
    const Cell& home = topology.pico(*user.my_pico);
    if (slot == *user.work_start) {
      retarget(user, sample_in_disc(home.center, home.radius, rng), roam_speed(params, rng));
    }
    if (slot == *user.work_start + user.work_len) {
      retarget(user, sample_in_disc(macro.center, macro.radius, rng), roam_speed(params, rng));
    }
  }

  if (distance(user.pos, user.dest) <= user.speed) {
    user.pos = user.dest;
    if (user.at_work(slot)) {
      const Cell& home = topology.pico(*user.my_pico);
      retarget(user, sample_in_disc(home.center, home.radius, rng), dwell_speed(params, rng));
    } else {
      retarget(user, sample_in_disc(macro.center, macro.radius, rng), roam_speed(params, rng));
    }
  } else {
    user.pos.x += user.velocity.vx;
    user.pos.y += user.velocity.vy;
  }
  return user;
}

bool draw_activity(const UserState& user, bool inside_pico, const ActivityParams& params, Rng& rng) {
  const bool boosted = user.kind == UserKind::kHotspot && inside_pico;
  return std::bernoulli_distribution(boosted ? params.hotspot_prob : params.uniform_prob)(rng);
}

}  // namespace hetsim
