#include "hetsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "hetsim/errors.hpp"

namespace hetsim {

std::string_view to_string(NetworkKind kind) {
  switch (kind) {
    case NetworkKind::kMoNet: return "monet";
    case NetworkKind::kCoe: return "coe";
    case NetworkKind::kUdc: return "udc";
    case NetworkKind::kMoNetWithCoeUsers: return "monet_coe_users";
    case NetworkKind::kMoNetWithUdcUsers: return "monet_udc_users";
  }
  return "unknown";
}

std::optional<NetworkKind> network_kind_from_string(std::string_view name) {
  for (NetworkKind kind : {NetworkKind::kMoNet, NetworkKind::kCoe, NetworkKind::kUdc, NetworkKind::kMoNetWithCoeUsers,
                           NetworkKind::kMoNetWithUdcUsers}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void invalid(const std::string& key, const std::string& why) {
  throw Error(ErrorCode::kValidationError, key + ": " + why);
}

void require(bool ok, const char* key, const char* why) {
  if (!ok) invalid(key, why);
}

void validate_power(const PowerParams& p, const std::string& prefix) {
  require(p.sectors >= 1, (prefix + ".n_sec").c_str(), "must be >= 1");
  if (!(p.p_max > 0.0)) invalid(prefix + ".p_max", "must be > 0");
  if (!(p.p0 >= 0.0)) invalid(prefix + ".p0", "must be >= 0");
  if (!std::isfinite(p.delta_p)) invalid(prefix + ".delta_p", "must be finite");
  if (!(p.p_sleep >= 0.0)) invalid(prefix + ".p_sleep", "must be >= 0");
  if (p.user_capacity < 1) invalid(prefix + ".user_capacity", "must be >= 1");
}

void validate_freespace(const FreeSpaceParams& p, const std::string& prefix) {
  if (!(p.alpha > 0.0)) invalid(prefix + ".alpha", "must be > 0");
  if (!(p.beta > 0.0)) invalid(prefix + ".beta", "must be > 0");
  if (!(p.breakpoint_m > 0.0)) invalid(prefix + ".g", "must be > 0");
  if (!(p.k > 0.0)) invalid(prefix + ".k", "must be > 0");
  if (!(p.target_power_w >= 0.0)) invalid(prefix + ".p0", "must be >= 0");
  if (!(p.max_power_w > 0.0)) invalid(prefix + ".p_max", "must be > 0");
}

bool is_hetnet(NetworkKind kind) { return kind == NetworkKind::kCoe || kind == NetworkKind::kUdc; }

}  // namespace

void validate(const Scenario& s) {
  require(s.n_users >= 1, "n_users", "must be >= 1");
  require(s.n_hotspot >= 0, "n_hotspot", "must be >= 0");
  require(s.n_hotspot <= s.n_users, "n_hotspot", "must not exceed n_users");
  require(s.n_picos >= 0, "n_picos", "must be >= 0");
  require(s.macro_radius > 0.0 && std::isfinite(s.macro_radius), "macro_radius", "must be > 0");
  require(s.pico_radius > 0.0 && s.pico_radius < s.macro_radius, "pico_radius", "must lie in (0, macro_radius)");
  require(s.boot_slots >= 0, "boot_slots", "must be >= 0");
  require(s.slots >= 1, "slots", "must be >= 1");
  require(s.realizations >= 1, "realizations", "must be >= 1");
  require(s.slot_duration > 0.0, "slot_duration", "must be > 0");
  require(s.activity.uniform_prob >= 0.0 && s.activity.uniform_prob <= 1.0, "activity.uniform_prob",
          "must lie in [0, 1]");
  require(s.activity.hotspot_prob >= 0.0 && s.activity.hotspot_prob <= 1.0, "activity.hotspot_prob",
          "must lie in [0, 1]");
  const MobilityParams& m = s.mobility;
  require(m.roam_speed_min >= 0.0 && m.roam_speed_min <= m.roam_speed_max, "mobility.roam_speed_min",
          "must satisfy 0 <= min <= max");
  require(m.dwell_speed_min >= 0.0 && m.dwell_speed_min <= m.dwell_speed_max, "mobility.dwell_speed_min",
          "must satisfy 0 <= min <= max");
  require(!s.schedule.start_slots.empty(), "schedule.start_slots", "must not be empty");
  for (std::size_t i = 0; i < s.schedule.start_slots.size(); ++i) {
    require(s.schedule.start_slots[i] >= 0, "schedule.start_slots", "must be non-negative");
    require(i == 0 || s.schedule.start_slots[i] > s.schedule.start_slots[i - 1], "schedule.start_slots",
            "must be strictly increasing");
  }
  require(s.schedule.duration >= 0, "schedule.duration", "must be >= 0");
  const ChannelParams& c = s.channel;
  require(c.system_bandwidth_hz > 0.0, "channel.system_bandwidth", "must be > 0");
  require(c.temperature_k > 0.0, "channel.temperature", "must be > 0");
  require(c.boltzmann > 0.0, "channel.boltzmann", "must be > 0");
  require(c.macro_shadow_std_db >= 0.0, "channel.macro_shadow_std", "must be >= 0");
  require(c.pico_shadow_std_db >= 0.0, "channel.pico_shadow_std", "must be >= 0");
  for (double v : {c.macro_tx_power_dbm, c.pico_tx_power_dbm, c.macro_antenna_gain_dbi, c.pico_antenna_gain_dbi,
                   c.ue_antenna_gain_dbi}) {
    require(std::isfinite(v), "channel", "powers and gains must be finite");
  }
  validate_power(s.macro_power, "power.macro");
  validate_power(s.pico_power, "power.pico");
  validate_freespace(s.legacy_macro, "legacy.macro");
  validate_freespace(s.legacy_pico, "legacy.pico");
  if (s.n_hotspot > 0 && s.topology == NetworkKind::kMoNet) {
    throw Error(ErrorCode::kNoPicosForHotspot, "n_hotspot > 0 needs a pico layout (use monet_coe_users or monet_udc_users)");
  }
  if (s.n_hotspot > 0 && s.n_picos == 0) {
    throw Error(ErrorCode::kNoPicosForHotspot, "n_hotspot > 0 with n_picos = 0");
  }
}

Topology build_layout(const Scenario& s) {
  switch (s.topology) {
    case NetworkKind::kMoNet:
      return build_monet(s.macro_radius);
    case NetworkKind::kCoe:
    case NetworkKind::kMoNetWithCoeUsers:
      return build_coe(s.macro_radius, s.pico_radius, s.n_picos);
    case NetworkKind::kUdc:
    case NetworkKind::kMoNetWithUdcUsers: {
      Rng rng(derive_seed(s.seed, 0, kTopologyStream));
      return build_udc(s.macro_radius, s.pico_radius, s.n_picos, rng);
    }
  }
  return build_monet(s.macro_radius);
}

double compute_ee(double total_capacity, double total_power) {
  if (total_power == 0.0) throw Error(ErrorCode::kZeroPower, "energy efficiency undefined at zero power");
  return total_capacity / total_power;
}

World::World(const Scenario& scenario, int realization)
    : scenario_(scenario),
      layout_(build_layout(scenario)),
      picos_serve_(is_hetnet(scenario.topology)),
      bandwidth_share_(user_bandwidth(scenario.channel.system_bandwidth_hz, scenario.n_users)) {
  const auto n = static_cast<std::size_t>(scenario.n_users);
  users_.reserve(n);
  user_rngs_.reserve(n);
  for (int i = 0; i < scenario.n_users; ++i) {
    user_rngs_.emplace_back(derive_seed(scenario.seed, static_cast<std::uint64_t>(realization),
                                        1 + static_cast<std::uint64_t>(i)));
    const UserKind kind = i < scenario.n_hotspot ? UserKind::kHotspot : UserKind::kUniform;
    users_.push_back(init_user(i, kind, layout_, scenario.schedule, scenario.mobility, user_rngs_.back()));
  }
  containing_.assign(n, std::nullopt);
  const auto n_picos = static_cast<std::size_t>(picos_serve_ ? layout_.pico_count() : 0);
  const EnbMode initial = scenario.legacy_mode ? EnbMode::kActive : EnbMode::kSleep;
  pico_states_.assign(n_picos, PicoControlState{initial, 0});
  pico_counts_.assign(n_picos, 0);
  pico_served_.assign(n_picos, 0);
}

SlotResult World::run_slot(int slot) {
  const Scenario& s = scenario_;

  for (std::size_t i = 0; i < users_.size(); ++i) {
    UserState& user = users_[i];
    user = step_user(std::move(user), slot, layout_, s.mobility, user_rngs_[i]);
    containing_[i] = containing_pico(layout_, user.pos);
    const bool in_home_pico = user.my_pico && containing_[i] == user.my_pico;
    user.active = draw_activity(user, in_home_pico, s.activity, user_rngs_[i]);
  }

  std::fill(pico_counts_.begin(), pico_counts_.end(), 0);
  std::fill(pico_served_.begin(), pico_served_.end(), 0);
  if (picos_serve_) {
    for (std::size_t i = 0; i < users_.size(); ++i) {
      if (users_[i].active && containing_[i]) ++pico_counts_[static_cast<std::size_t>(*containing_[i])];
    }
    if (!s.legacy_mode) {
      for (std::size_t j = 0; j < pico_states_.size(); ++j) {
        pico_states_[j] = step_state(pico_states_[j], pico_counts_[j], s.policy, s.boot_slots);
      }
    }
  }

  SlotResult result;
  SlotMetrics& m = result.metrics;
  m.slot = slot;
  result.users.reserve(users_.size());
  double legacy_macro_power = 0.0;
  double legacy_pico_power = 0.0;

  for (std::size_t i = 0; i < users_.size(); ++i) {
    const UserState& user = users_[i];
    UserSlotRecord record{user.id, ServingKind::kIdle, -1, 0.0};
    if (user.active) {
      const bool on_pico = picos_serve_ && containing_[i] &&
                           pico_states_[static_cast<std::size_t>(*containing_[i])].mode == EnbMode::kActive;
      const CellKind kind = on_pico ? CellKind::kPico : CellKind::kMacro;
      const Cell& cell = on_pico ? layout_.pico(*containing_[i]) : layout_.macro();
      const double d = std::max(distance(user.pos, cell.center), kMinPathLossDistance);
      const double shadow = sample_shadow_db(kind, s.channel, user_rngs_[i]);
      record.capacity = evaluate_link(kind, d, bandwidth_share_, shadow, s.channel).capacity_bps;
      m.total_capacity += record.capacity;
      if (on_pico) {
        record.serving = ServingKind::kPico;
        record.pico_id = *containing_[i];
        ++pico_served_[static_cast<std::size_t>(record.pico_id)];
        ++m.n_pico_served_active;
        m.pico_capacity += record.capacity;
        if (s.legacy_mode) legacy_pico_power += freespace_tx_power(d, s.legacy_pico);
      } else {
        record.serving = ServingKind::kMacro;
        ++m.n_macro_served_active;
        if (s.legacy_mode) legacy_macro_power += freespace_tx_power(d, s.legacy_macro);
      }
    }
    result.users.push_back(record);
  }

  for (const PicoControlState& pico : pico_states_) {
    if (pico.mode == EnbMode::kActive) ++m.n_active_picos;
  }
  if (s.legacy_mode) {
    m.pico_power = legacy_pico_power;
    m.total_power = legacy_macro_power + legacy_pico_power;
  } else {
    for (std::size_t j = 0; j < pico_states_.size(); ++j) {
      m.pico_power += consumed_power(s.pico_power, pico_states_[j].mode, pico_served_[j]);
    }
    m.total_power = consumed_power(s.macro_power, EnbMode::kActive, m.n_macro_served_active) + m.pico_power;
  }
  m.ee = m.total_power > 0.0 ? compute_ee(m.total_capacity, m.total_power) : 0.0;
  return result;
}

void Histogram::add(double value) {
  if (value < lo) {
    ++underflow;
    return;
  }
  const auto index = static_cast<std::size_t>(std::floor((value - lo) / bin_width));
  if (index >= counts.size()) {
    ++overflow;
  } else {
    ++counts[index];
  }
}

void Histogram::merge(const Histogram& other) {
  for (std::size_t i = 0; i < counts.size() && i < other.counts.size(); ++i) counts[i] += other.counts[i];
  underflow += other.underflow;
  overflow += other.overflow;
}

std::uint64_t Histogram::total() const {
  std::uint64_t sum = underflow + overflow;
  for (auto c : counts) sum += c;
  return sum;
}

double Histogram::mode_lower_edge() const {
  const auto it = std::max_element(counts.begin(), counts.end());
  return lo + bin_width * static_cast<double>(std::distance(counts.begin(), it));
}

namespace {

struct RealizationOutcome {
  std::vector<SlotMetrics> slots;
  std::vector<UserAggregate> users;
  Histogram rate_histogram;
};

RealizationOutcome run_realization(const Scenario& s, int realization, const SlotObserver& observer) {
  World world(s, realization);
  RealizationOutcome out;
  out.slots.reserve(static_cast<std::size_t>(s.slots));
  out.users.resize(static_cast<std::size_t>(s.n_users));
  for (const UserState& user : world.users()) {
    out.users[static_cast<std::size_t>(user.id)].user_id = user.id;
    out.users[static_cast<std::size_t>(user.id)].kind = user.kind;
  }
  for (int slot = 0; slot < s.slots; ++slot) {
    SlotResult result = world.run_slot(slot);
    if (observer && realization == 0) observer(realization, slot, world, result);
    for (const UserSlotRecord& rec : result.users) {
      if (rec.serving == ServingKind::kIdle) continue;
      UserAggregate& agg = out.users[static_cast<std::size_t>(rec.user_id)];
      agg.rate_sum += rec.capacity;
      ++agg.active_slots;
      if (rec.serving == ServingKind::kPico) ++agg.pico_slots;
      out.rate_histogram.add(rec.capacity);
    }
    out.slots.push_back(result.metrics);
  }
  return out;
}

double pico_ee(const SlotMetrics& m) { return m.pico_power > 0.0 ? m.pico_capacity / m.pico_power : 0.0; }

}  // namespace

ScenarioResult run_scenario(const Scenario& scenario, const RunOptions& options) {
  validate(scenario);
  const int n_real = scenario.realizations;
  std::vector<RealizationOutcome> outcomes(static_cast<std::size_t>(n_real));

  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, n_real);
  if (threads == 1) {
    for (int r = 0; r < n_real; ++r) outcomes[static_cast<std::size_t>(r)] = run_realization(scenario, r, options.observer);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    {
      std::vector<std::jthread> workers;
      for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          try {
            for (int r = t; r < n_real; r += threads) {
              outcomes[static_cast<std::size_t>(r)] = run_realization(scenario, r, options.observer);
            }
          } catch (...) {
            errors[static_cast<std::size_t>(t)] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Aggregation runs in realization order so results are thread-count independent.
  ScenarioResult result;
  const auto n_slots = static_cast<std::size_t>(scenario.slots);
  result.trace.resize(n_slots);
  result.users.resize(static_cast<std::size_t>(scenario.n_users));
  for (std::size_t u = 0; u < result.users.size(); ++u) {
    result.users[u].user_id = static_cast<int>(u);
    result.users[u].kind = outcomes.front().users[u].kind;
  }

  const double inv_real = 1.0 / n_real;
  double ee_sum = 0.0, cap_sum = 0.0, power_sum = 0.0, picos_sum = 0.0;
  double pico_cap_sum = 0.0, pico_power_sum = 0.0, pico_ee_sum = 0.0;
  for (const RealizationOutcome& out : outcomes) {
    for (std::size_t k = 0; k < n_slots; ++k) {
      const SlotMetrics& m = out.slots[k];
      SlotSummary& t = result.trace[k];
      t.slot = m.slot;
      t.n_active_picos += m.n_active_picos * inv_real;
      t.macro_active_users += m.n_macro_served_active * inv_real;
      t.pico_active_users += m.n_pico_served_active * inv_real;
      t.capacity_bps += m.total_capacity * inv_real;
      t.power_w += m.total_power * inv_real;
      t.ee_bits_per_joule += m.ee * inv_real;
      t.pico_capacity_bps += m.pico_capacity * inv_real;
      t.pico_power_w += m.pico_power * inv_real;
      t.pico_ee_bits_per_joule += pico_ee(m) * inv_real;
      ee_sum += m.ee;
      cap_sum += m.total_capacity;
      power_sum += m.total_power;
      picos_sum += m.n_active_picos;
      pico_cap_sum += m.pico_capacity;
      pico_power_sum += m.pico_power;
      pico_ee_sum += pico_ee(m);
    }
    for (std::size_t u = 0; u < out.users.size(); ++u) {
      const UserAggregate& agg = out.users[u];
      result.users[u].rate_sum += agg.rate_sum;
      result.users[u].active_slots += agg.active_slots;
      result.users[u].pico_slots += agg.pico_slots;
      if (agg.active_slots > 0) {
        result.user_mean_histogram.add(agg.mean_rate());
        result.max_user_mean_rate = std::max(result.max_user_mean_rate, agg.mean_rate());
      }
    }
    result.rate_histogram.merge(out.rate_histogram);
  }

  const double n_samples = static_cast<double>(n_real) * static_cast<double>(n_slots);
  result.ee_mean = ee_sum / n_samples;
  result.capacity_mean = cap_sum / n_samples;
  result.power_mean = power_sum / n_samples;
  result.active_picos_mean = picos_sum / n_samples;
  result.pico_capacity_mean = pico_cap_sum / n_samples;
  result.pico_power_mean = pico_power_sum / n_samples;
  result.pico_ee_mean = pico_ee_sum / n_samples;
  if (n_samples > 1.0) {
    double sq = 0.0, pico_sq = 0.0;
    for (const RealizationOutcome& out : outcomes) {
      for (const SlotMetrics& m : out.slots) {
        sq += (m.ee - result.ee_mean) * (m.ee - result.ee_mean);
        pico_sq += (pico_ee(m) - result.pico_ee_mean) * (pico_ee(m) - result.pico_ee_mean);
      }
    }
    result.ee_std = std::sqrt(sq / (n_samples - 1.0));
    result.pico_ee_std = std::sqrt(pico_sq / (n_samples - 1.0));
  }
  return result;
}

}  // namespace hetsim
