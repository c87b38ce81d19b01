#include "hetsim/sweep.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hetsim/config.hpp"
#include "hetsim/errors.hpp"

namespace hetsim {

std::vector<SweepRow> run_sweep(const std::string& base, const std::vector<std::string>& overrides,
                                const SweepSpec& spec, int threads) {
  if (spec.param.empty()) throw Error(ErrorCode::kValidationError, "sweep: --param is required");
  if (!(spec.step > 0.0)) throw Error(ErrorCode::kValidationError, "sweep: step must be > 0");
  if (spec.to < spec.from) throw Error(ErrorCode::kValidationError, "sweep: to must be >= from");

  std::vector<SweepRow> rows;
  const auto points = static_cast<long>(std::floor((spec.to - spec.from) / spec.step + 1e-9)) + 1;
  for (long k = 0; k < points; ++k) {
    const double value = spec.from + static_cast<double>(k) * spec.step;
    std::vector<std::string> all = overrides;
    if (value == std::floor(value) && std::abs(value) < 1e15) {
      all.push_back(fmt::format("{}={}", spec.param, static_cast<long long>(value)));
    } else {
      all.push_back(fmt::format("{}={}", spec.param, value));
    }
    const Scenario scenario = parse_scenario(base, all);
    RunOptions options;
    options.threads = threads;
    const ScenarioResult result = run_scenario(scenario, options);
    rows.push_back({value, std::string(to_string(scenario.topology)), result.ee_mean, result.ee_std,
                    result.capacity_mean, result.power_mean});
  }
  return rows;
}

}  // namespace hetsim
