#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hetsim/config.hpp"
#include "hetsim/engine.hpp"
#include "hetsim/errors.hpp"
#include "hetsim/output.hpp"
#include "hetsim/presets.hpp"
#include "hetsim/sweep.hpp"

namespace fs = std::filesystem;
using namespace hetsim;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

struct RunArgs {
  std::string scenario;
  std::vector<std::string> overrides;
  std::string out = "out";
  bool trace_users = false;
  bool trace_picos = false;
  int threads = 0;
};

void cmd_run(const RunArgs& args) {
  const Scenario scenario = load_scenario(args.scenario, args.overrides);
  const fs::path dir = args.out;
  fs::create_directories(dir);

  std::ofstream users_trace, picos_trace;
  if (args.trace_users) users_trace.open(dir / "trace_users.csv");
  if (args.trace_picos) picos_trace.open(dir / "trace_picos.csv");
  TraceWriter trace(args.trace_users ? &users_trace : nullptr, args.trace_picos ? &picos_trace : nullptr);

  RunOptions options;
  options.threads = args.threads;
  if (args.trace_users || args.trace_picos) options.observer = trace.observer();
  const ScenarioResult result = run_scenario(scenario, options);

  const auto emit = [&](const char* name, auto writer) {
    std::ostringstream text;
    writer(text);
    write_text_file(dir / name, text.str());
  };
  emit("slots.csv", [&](std::ostream& out) { write_slot_csv(out, result.trace); });
  emit("pico_slots.csv", [&](std::ostream& out) { write_pico_slot_csv(out, result.trace); });
  emit("users.csv", [&](std::ostream& out) { write_user_csv(out, result.users); });
  emit("rate_hist.csv", [&](std::ostream& out) { write_histogram_csv(out, result.rate_histogram); });
  emit("user_mean_hist.csv", [&](std::ostream& out) { write_histogram_csv(out, result.user_mean_histogram); });
  write_text_file(dir / "topology.json", topology_to_json(build_layout(scenario)) + "\n");
  write_text_file(dir / "scenario.json", serialize_scenario(scenario) + "\n");

  std::cout << "ee_mean=" << result.ee_mean << " ee_std=" << result.ee_std
            << " capacity_mean=" << result.capacity_mean << " power_mean=" << result.power_mean << "\n"
            << "wrote " << dir.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slotted macro/pico HetNet energy-efficiency simulator"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run one scenario file");
  run->add_option("--scenario", run_args.scenario, "Scenario JSON file")->required();
  run->add_option("--set", run_args.overrides, "Override key=value (repeatable)");
  run->add_option("--out", run_args.out, "Output directory");
  run->add_flag("--trace-users", run_args.trace_users, "Write per-slot user trace of realization 0");
  run->add_flag("--trace-picos", run_args.trace_picos, "Write per-slot pico mode trace of realization 0");
  run->add_option("--threads", run_args.threads, "Worker threads (0 = all cores)");

  RunArgs sweep_args;
  SweepSpec spec;
  auto* sweep = app.add_subcommand("sweep", "Sweep one numeric config key");
  sweep->add_option("--scenario", sweep_args.scenario, "Scenario JSON file")->required();
  sweep->add_option("--param", spec.param, "Dotted key, e.g. policy.t_activate")->required();
  sweep->add_option("--from", spec.from)->required();
  sweep->add_option("--to", spec.to)->required();
  sweep->add_option("--step", spec.step);
  sweep->add_option("--set", sweep_args.overrides, "Override key=value (repeatable)");
  sweep->add_option("--out", sweep_args.out, "Output directory");
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)");

  PresetOptions preset_options;
  std::string preset_name;
  std::string out_dir = "out";
  auto* preset = app.add_subcommand("preset", "Run a named experiment family");
  preset->add_option("name", preset_name, "Preset name (see `presets`)")->required();
  preset->add_option("--seed", preset_options.seed);
  preset->add_option("--out", out_dir, "Output root");
  preset->add_option("--threads", preset_options.threads, "Worker threads (0 = all cores)");

  std::string manifest;
  int replay_threads = 0;
  auto* replay = app.add_subcommand("replay", "Re-run the preset recorded in a manifest");
  replay->add_option("manifest", manifest)->required();
  replay->add_option("--out", out_dir, "Output root");
  replay->add_option("--threads", replay_threads, "Worker threads (0 = all cores)");

  auto* presets = app.add_subcommand("presets", "List preset names");

  RunArgs dump_args;
  auto* dump = app.add_subcommand("dump-topology", "Print the scenario's layout as JSON");
  dump->add_option("--scenario", dump_args.scenario, "Scenario JSON file")->required();
  dump->add_option("--set", dump_args.overrides, "Override key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) {
      cmd_run(run_args);
    } else if (*sweep) {
      const std::vector<SweepRow> rows =
          run_sweep(read_file(sweep_args.scenario), sweep_args.overrides, spec, sweep_args.threads);
      fs::create_directories(sweep_args.out);
      std::ostringstream text;
      write_sweep_csv(text, rows);
      write_text_file(fs::path(sweep_args.out) / "sweep.csv", text.str());
      std::cout << text.str();
    } else if (*preset) {
      preset_options.out_dir = out_dir;
      const PresetReport report = run_preset(preset_name, preset_options);
      std::cout << "wrote " << report.files.size() << " files, manifest " << report.manifest.string() << "\n";
    } else if (*replay) {
      const PresetReport report = replay_manifest(manifest, out_dir, replay_threads);
      std::cout << "wrote " << report.files.size() << " files, manifest " << report.manifest.string() << "\n";
    } else if (*presets) {
      for (const std::string& name : preset_names()) std::cout << name << "\n";
    } else if (*dump) {
      std::cout << topology_to_json(build_layout(load_scenario(dump_args.scenario, dump_args.overrides))) << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_config_error() ? kExitConfig : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
