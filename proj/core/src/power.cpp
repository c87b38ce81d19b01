#include "hetsim/power.hpp"

#include <algorithm>

namespace hetsim {

std::string_view to_string(EnbMode mode) {
  switch (mode) {
    case EnbMode::kSleep: return "sleep";
    case EnbMode::kBoot: return "boot";
    case EnbMode::kActive: return "active";
  }
  return "unknown";
}

PowerParams PowerParams::macro_defaults() { return {3, 40.0, 260.0, 4.75, 150.0, 1000}; }
PowerParams PowerParams::pico_defaults() { return {1, 0.25, 13.6, 4.0, 8.6, 50}; }
PowerParams PowerParams::earth_macro() { return {6, 20.0, 130.0, 4.7, 75.0, 1000}; }
PowerParams PowerParams::earth_pico() { return {2, 0.13, 6.8, 4.0, 4.3, 50}; }

double consumed_power(const PowerParams& params, EnbMode mode, int n_served) {
  if (mode != EnbMode::kActive) return params.sectors * params.p_sleep;
  const int load = std::clamp(n_served, 0, params.user_capacity);
  const double rf_out = params.p_max * load / params.user_capacity;
  return params.sectors * (params.p0 + params.delta_p * rf_out);
}

}  // namespace hetsim
