#pragma once

#include <string>
#include <vector>

#include "hetsim/output.hpp"

namespace hetsim {

struct SweepSpec {
  std::string param;  // dotted config key, e.g. "policy.t_activate"
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;
};

// Runs `base` (JSON scenario text plus overrides) once per value of the swept
// parameter; integral-valued points are written as JSON integers.
std::vector<SweepRow> run_sweep(const std::string& base, const std::vector<std::string>& overrides,
                                const SweepSpec& spec, int threads = 0);

}  // namespace hetsim
