#include "hetsim/presets.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "hetsim/config.hpp"
#include "hetsim/engine.hpp"
#include "hetsim/errors.hpp"
#include "hetsim/output.hpp"

#ifndef HETSIM_VERSION
#define HETSIM_VERSION "unknown"
#endif

namespace hetsim {

std::string version_string() { return HETSIM_VERSION; }

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kMaxSweepThreshold = 30;
constexpr int kSweepRealizations = 100;

struct Context {
  PresetOptions options;
  std::filesystem::path dir;
  std::vector<std::filesystem::path> files;
  ordered_json grid = ordered_json::object();
  std::string base_scenario;
};

void emit(Context& ctx, const std::string& name, const std::function<void(std::ostream&)>& writer) {
  std::ostringstream text;
  writer(text);
  const auto path = ctx.dir / name;
  write_text_file(path, text.str());
  ctx.files.push_back(path);
}

ScenarioResult run(const Context& ctx, const Scenario& scenario, const SlotObserver& observer = {}) {
  RunOptions options;
  options.threads = ctx.options.threads;
  options.observer = observer;
  return run_scenario(scenario, options);
}

std::string num(double v) { return fmt::format("{}", v); }

SweepRow total_row(double value, std::string_view name, const ScenarioResult& r) {
  return {value, std::string(name), r.ee_mean, r.ee_std, r.capacity_mean, r.power_mean};
}

SweepRow pico_row(double value, std::string_view name, const ScenarioResult& r) {
  return {value, std::string(name) + "_pico_only", r.pico_ee_mean, r.pico_ee_std, r.pico_capacity_mean,
          r.pico_power_mean};
}

// 100 independent one-slot snapshots with instantaneous wake-up and every
// user active.
Scenario snapshot_base(std::uint64_t seed) {
  Scenario s;
  s.seed = seed;
  s.slots = 1;
  s.realizations = kSweepRealizations;
  s.boot_slots = 0;
  s.activity = {1.0, 1.0};
  s.pico_power.p_sleep = 0.0;
  s.mobility.hotspot_placement = HotspotPlacement::kInCell;
  return s;
}

// One simulated day of commuting hotspot users.
Scenario day_base(std::uint64_t seed) {
  Scenario s;
  s.seed = seed;
  s.n_hotspot = 500;
  s.slots = 1000;
  s.realizations = 1;
  s.policy = ThresholdPolicy::one_threshold(5);
  return s;
}

bool is_macro_only(NetworkKind kind) { return kind != NetworkKind::kCoe && kind != NetworkKind::kUdc; }

struct ThresholdSweep {
  std::string file_stem;
  std::vector<NetworkKind> kinds;
  std::vector<int> histogram_thresholds;
};

// EE, capacity and power versus a one-threshold policy T = 0..30. Macro-only
// kinds do not depend on T and run once.
void threshold_sweep(Context& ctx, const Scenario& base, const ThresholdSweep& sweep) {
  std::vector<SweepRow> rows;
  std::ostringstream active;
  active << "threshold,topology,active_picos_mean\n";

  std::vector<std::pair<NetworkKind, ScenarioResult>> fixed;
  for (NetworkKind kind : sweep.kinds) {
    if (!is_macro_only(kind)) continue;
    Scenario s = base;
    s.topology = kind;
    fixed.emplace_back(kind, run(ctx, s));
    if (!sweep.histogram_thresholds.empty()) {
      emit(ctx, fmt::format("{}_hist_{}.csv", sweep.file_stem, to_string(kind)),
           [&](std::ostream& out) { write_histogram_csv(out, fixed.back().second.rate_histogram); });
    }
  }

  for (int t = 0; t <= kMaxSweepThreshold; ++t) {
    for (const auto& [kind, result] : fixed) {
      rows.push_back(total_row(t, to_string(kind), result));
      fmt::print(active, "{},{},0\n", t, to_string(kind));
    }
    for (NetworkKind kind : sweep.kinds) {
      if (is_macro_only(kind)) continue;
      Scenario s = base;
      s.topology = kind;
      s.policy = ThresholdPolicy::one_threshold(t);
      const ScenarioResult result = run(ctx, s);
      rows.push_back(total_row(t, to_string(kind), result));
      rows.push_back(pico_row(t, to_string(kind), result));
      fmt::print(active, "{},{},{}\n", t, to_string(kind), result.active_picos_mean);
      if (std::ranges::find(sweep.histogram_thresholds, t) != sweep.histogram_thresholds.end()) {
        emit(ctx, fmt::format("{}_hist_{}_t{}.csv", sweep.file_stem, to_string(kind), t),
             [&](std::ostream& out) { write_histogram_csv(out, result.rate_histogram); });
      }
    }
  }
  emit(ctx, sweep.file_stem + ".csv", [&](std::ostream& out) { write_sweep_csv(out, rows); });
  emit(ctx, sweep.file_stem + "_active_picos.csv", [&](std::ostream& out) { out << active.str(); });
}

void table5(Context& ctx) {
  const Scenario base = snapshot_base(ctx.options.seed);
  ctx.base_scenario = serialize_scenario(base);
  const std::vector<int> thresholds{0, 8, 13};
  ctx.grid = {{"threshold", thresholds}, {"topology", {"monet", "coe", "udc"}}};
  std::vector<SweepRow> rows;
  for (int t : thresholds) {
    for (NetworkKind kind : {NetworkKind::kMoNet, NetworkKind::kCoe, NetworkKind::kUdc}) {
      Scenario s = base;
      s.topology = kind;
      s.policy = ThresholdPolicy::one_threshold(t);
      rows.push_back(total_row(t, to_string(kind), run(ctx, s)));
    }
  }
  emit(ctx, "table5.csv", [&](std::ostream& out) { write_sweep_csv(out, rows); });
}

void fig12_threshold_sweep(Context& ctx) {
  Scenario base = snapshot_base(ctx.options.seed);
  ctx.base_scenario = serialize_scenario(base);
  const std::vector<double> sleeps{0.0, 8.6};
  ctx.grid = {{"threshold", {0, kMaxSweepThreshold}}, {"p_sleep", sleeps}, {"n_hotspot", 0}};
  for (double p_sleep : sleeps) {
    base.pico_power.p_sleep = p_sleep;
    threshold_sweep(ctx, base,
                    {"sweep_psleep" + num(p_sleep),
                     {NetworkKind::kMoNet, NetworkKind::kCoe, NetworkKind::kUdc},
                     p_sleep == 0.0 ? std::vector<int>{2, 8, 12} : std::vector<int>{}});
  }
}

void fig18_22_sleep_sweep(Context& ctx) {
  Scenario base = snapshot_base(ctx.options.seed);
  base.n_hotspot = 500;
  ctx.base_scenario = serialize_scenario(base);
  const std::vector<double> sleeps{0.0, 2.0, 4.0, 6.0, 8.6};
  ctx.grid = {{"threshold", {0, kMaxSweepThreshold}}, {"p_sleep", sleeps}, {"n_hotspot", 500}};
  for (double p_sleep : sleeps) {
    base.pico_power.p_sleep = p_sleep;
    threshold_sweep(ctx, base,
                    {"sweep_psleep" + num(p_sleep),
                     {NetworkKind::kMoNetWithCoeUsers, NetworkKind::kMoNetWithUdcUsers, NetworkKind::kCoe,
                      NetworkKind::kUdc},
                     {}});
  }
}

void fig23_26_hotspot_sweep(Context& ctx) {
  Scenario base = snapshot_base(ctx.options.seed);
  ctx.base_scenario = serialize_scenario(base);
  const std::vector<int> hotspots{0, 250, 500, 750};
  const std::vector<double> sleeps{0.0, 8.6};
  ctx.grid = {{"threshold", {0, kMaxSweepThreshold}}, {"p_sleep", sleeps}, {"n_hotspot", hotspots}};
  for (int n_hotspot : hotspots) {
    for (double p_sleep : sleeps) {
      Scenario s = base;
      s.n_hotspot = n_hotspot;
      s.pico_power.p_sleep = p_sleep;
      std::vector<NetworkKind> kinds{NetworkKind::kCoe, NetworkKind::kUdc};
      if (n_hotspot == 0) {
        kinds.insert(kinds.begin(), NetworkKind::kMoNet);
      } else {
        kinds.insert(kinds.begin(), {NetworkKind::kMoNetWithCoeUsers, NetworkKind::kMoNetWithUdcUsers});
      }
      const bool histograms = n_hotspot == 500 && p_sleep == 8.6;
      threshold_sweep(ctx, s,
                      {fmt::format("sweep_hs{}_psleep{}", n_hotspot, num(p_sleep)), kinds,
                       histograms ? std::vector<int>{5, 21, 27} : std::vector<int>{}});
    }
  }
}

constexpr NetworkKind kDayKinds[] = {NetworkKind::kUdc, NetworkKind::kCoe, NetworkKind::kMoNetWithUdcUsers,
                                     NetworkKind::kMoNetWithCoeUsers};

void day_runs(Context& ctx, const Scenario& base, const std::string& tag) {
  for (NetworkKind kind : kDayKinds) {
    Scenario s = base;
    s.topology = kind;
    const ScenarioResult result = run(ctx, s);
    const std::string name = fmt::format("{}_{}", to_string(kind), tag);
    emit(ctx, "slots_" + name + ".csv", [&](std::ostream& out) { write_slot_csv(out, result.trace); });
    emit(ctx, "users_" + name + ".csv", [&](std::ostream& out) { write_user_csv(out, result.users); });
    emit(ctx, "user_mean_hist_" + name + ".csv",
         [&](std::ostream& out) { write_histogram_csv(out, result.user_mean_histogram); });
    if (!is_macro_only(kind)) {
      emit(ctx, "slots_" + name + "_pico_only.csv",
           [&](std::ostream& out) { write_pico_slot_csv(out, result.trace); });
    }
  }
}

void fig27_28_timeseries(Context& ctx) {
  Scenario base = day_base(ctx.options.seed);
  ctx.base_scenario = serialize_scenario(base);
  const std::vector<double> sleeps{0.0, 8.6};
  ctx.grid = {{"p_sleep", sleeps}, {"topology", {"udc", "coe", "monet_udc_users", "monet_coe_users"}}};
  for (double p_sleep : sleeps) {
    base.pico_power.p_sleep = p_sleep;
    day_runs(ctx, base, "psleep" + num(p_sleep));
  }
}

void fig29_30_occupancy(Context& ctx) {
  Scenario base = day_base(ctx.options.seed);
  base.policy = ThresholdPolicy::two_threshold(15, 5);
  ctx.base_scenario = serialize_scenario(base);
  ctx.grid = {{"topology", {"udc", "coe"}}};
  for (NetworkKind kind : {NetworkKind::kUdc, NetworkKind::kCoe}) {
    Scenario s = base;
    s.topology = kind;
    std::ostringstream picos;
    TraceWriter trace(nullptr, &picos);
    const ScenarioResult result = run(ctx, s, trace.observer());
    emit(ctx, fmt::format("slots_{}.csv", to_string(kind)),
         [&](std::ostream& out) { write_slot_csv(out, result.trace); });
    emit(ctx, fmt::format("trace_picos_{}.csv", to_string(kind)), [&](std::ostream& out) { out << picos.str(); });
  }
}

void fig35_42_policy_compare(Context& ctx) {
  Scenario base = day_base(ctx.options.seed);
  ctx.base_scenario = serialize_scenario(base);
  const std::vector<std::pair<std::string, ThresholdPolicy>> policies{
      {"t5", ThresholdPolicy::one_threshold(5)},
      {"t9_4", ThresholdPolicy::two_threshold(9, 4)},
      {"t9", ThresholdPolicy::one_threshold(9)},
      {"t12", ThresholdPolicy::one_threshold(12)}};
  const std::vector<double> sleeps{0.0, 8.6};
  ctx.grid = {{"policy", {"t5", "t9_4", "t9", "t12"}}, {"p_sleep", sleeps}};
  for (const auto& [tag, policy] : policies) {
    for (double p_sleep : sleeps) {
      base.policy = policy;
      base.pico_power.p_sleep = p_sleep;
      day_runs(ctx, base, fmt::format("{}_psleep{}", tag, num(p_sleep)));
    }
  }
}

using PresetFn = void (*)(Context&);

const std::vector<std::pair<std::string, PresetFn>>& registry() {
  static const std::vector<std::pair<std::string, PresetFn>> presets{
      {"table5", table5},
      {"fig12_threshold_sweep", fig12_threshold_sweep},
      {"fig18_22_sleep_sweep", fig18_22_sleep_sweep},
      {"fig23_26_hotspot_sweep", fig23_26_hotspot_sweep},
      {"fig27_28_timeseries", fig27_28_timeseries},
      {"fig29_30_occupancy", fig29_30_occupancy},
      {"fig35_42_policy_compare", fig35_42_policy_compare},
  };
  return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& entry : registry()) names.push_back(entry.first);
  return names;
}

PresetReport run_preset(std::string_view name, const PresetOptions& options) {
  const auto& presets = registry();
  const auto it = std::ranges::find_if(presets, [&](const auto& entry) { return entry.first == name; });
  if (it == presets.end()) throw Error(ErrorCode::kUnknownPreset, "no preset named '" + std::string(name) + "'");

  Context ctx;
  ctx.options = options;
  ctx.dir = options.out_dir / it->first;
  std::filesystem::create_directories(ctx.dir);
  it->second(ctx);

  ordered_json manifest;
  manifest["preset"] = it->first;
  manifest["seed"] = options.seed;
  manifest["version"] = version_string();
  manifest["grid"] = ctx.grid;
  manifest["base_scenario"] = ordered_json::parse(ctx.base_scenario);
  manifest["files"] = ordered_json::array();
  for (const auto& file : ctx.files) manifest["files"].push_back(file.filename().string());

  PresetReport report;
  report.directory = ctx.dir;
  report.manifest = ctx.dir / "manifest.json";
  report.files = ctx.files;
  write_text_file(report.manifest, manifest.dump(2) + "\n");
  return report;
}

PresetReport replay_manifest(const std::filesystem::path& manifest, const std::filesystem::path& out_dir,
                             int threads) {
  std::ifstream in(manifest);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read manifest " + manifest.string());
  const auto doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("preset") || !doc.contains("seed") ||
      !doc["preset"].is_string() || !doc["seed"].is_number_integer()) {
    throw Error(ErrorCode::kParseError, "manifest needs string 'preset' and integer 'seed'");
  }
  PresetOptions options;
  options.seed = doc["seed"].get<std::uint64_t>();
  options.out_dir = out_dir;
  options.threads = threads;
  return run_preset(doc["preset"].get<std::string>(), options);
}

}  // namespace hetsim
