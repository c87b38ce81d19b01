#pragma once

#include <string_view>

namespace hetsim {

enum class EnbMode { kSleep, kBoot, kActive };

std::string_view to_string(EnbMode mode);

// Linear load-dependent eNB power model. Load is the served-user fraction of
// user_capacity, so RF output is p_max * min(n, capacity) / capacity.
struct PowerParams {
  int sectors = 1;
  double p_max = 0.25;
  double p0 = 13.6;
  double delta_p = 4.0;
  double p_sleep = 8.6;
  int user_capacity = 50;

  // 3-sector macro and single-sector pico used for every result.
  static PowerParams macro_defaults();
  static PowerParams pico_defaults();
  // Alternate per-transceiver parameter set (6 / 2 transceivers).
  static PowerParams earth_macro();
  static PowerParams earth_pico();

  bool operator==(const PowerParams&) const = default;
};

// Boot draws sleep power and serves nobody.
double consumed_power(const PowerParams& params, EnbMode mode, int n_served = 0);

inline double slot_energy(double power_w, double slot_duration_s) { return power_w * slot_duration_s; }

}  // namespace hetsim
