#include <benchmark/benchmark.h>

#include "hetsim/channel.hpp"
#include "hetsim/engine.hpp"

using namespace hetsim;

static void BM_RunSlot(benchmark::State& state) {
  Scenario s;
  s.topology = NetworkKind::kUdc;
  s.n_users = static_cast<int>(state.range(0));
  s.n_hotspot = s.n_users / 2;
  World world(s, 0);
  int slot = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(world.run_slot(slot));
    slot = (slot + 1) % s.slots;
  }
  state.SetItemsProcessed(state.iterations() * s.n_users);
}
BENCHMARK(BM_RunSlot)->Arg(100)->Arg(1000)->Arg(5000);

static void BM_RunScenarioSnapshot(benchmark::State& state) {
  Scenario s;
  s.topology = NetworkKind::kCoe;
  s.slots = 1;
  s.realizations = 100;
  s.boot_slots = 0;
  s.activity = {1.0, 1.0};
  RunOptions options;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(s, options).ee_mean);
}
BENCHMARK(BM_RunScenarioSnapshot)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_EvaluateLink(benchmark::State& state) {
  const ChannelParams params;
  double d = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_link(CellKind::kMacro, d, 20e3, 0.0, params));
    d = d > 500.0 ? 1.0 : d + 0.5;
  }
}
BENCHMARK(BM_EvaluateLink);

BENCHMARK_MAIN();
