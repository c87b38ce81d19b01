#pragma once

#include "hetsim/random.hpp"
#include "hetsim/topology.hpp"

namespace hetsim {

// Link-budget parameters. Powers in dBm, gains in dBi, shadowing std in dB.
struct ChannelParams {
  double macro_tx_power_dbm = 46.0;
  double pico_tx_power_dbm = 30.0;
  double macro_antenna_gain_dbi = 14.0;
  double pico_antenna_gain_dbi = 5.0;
  double ue_antenna_gain_dbi = 0.0;
  double macro_shadow_std_db = 8.0;
  double pico_shadow_std_db = 10.0;
  double system_bandwidth_hz = 20e6;
  double temperature_k = 290.0;
  double boltzmann = 1.380649e-23;

  bool operator==(const ChannelParams&) const = default;
};

struct LinkBudget {
  double path_loss_db = 0.0;
  double shadow_db = 0.0;
  double rx_power_dbm = 0.0;
  double noise_power_dbm = 0.0;
  double snr_linear = 0.0;
  double capacity_bps = 0.0;
  double bandwidth_hz = 0.0;
};

// Distances below this are evaluated at the clamp; the dB models diverge at 0.
inline constexpr double kMinPathLossDistance = 1.0;

/// Distance-dependent path loss in dB.
///
/// Macro: 140.7 + 36.7 log10(d[km]); pico: 128.1 + 37.6 log10(d[km]).
/// Throws kNonPositiveDistance for d <= 0.
double path_loss_db(CellKind kind, double distance_m);

// Zero-mean Gaussian in dB with the kind's standard deviation. Always consumes
// exactly one standard-normal draw regardless of kind.
double sample_shadow_db(CellKind kind, const ChannelParams& params, Rng& rng);

double thermal_noise_dbm(double bandwidth_hz, const ChannelParams& params);

double shannon_capacity(double bandwidth_hz, double snr_linear);

LinkBudget evaluate_link(CellKind kind, double distance_m, double bandwidth_hz, double shadow_db,
                         const ChannelParams& params);

// Equal share W / N over the configured population. Throws kZeroUsers.
double user_bandwidth(double total_bandwidth_hz, int n_total_users);

// Legacy free-space power model.
struct FreeSpaceParams {
  double alpha = 2.0;
  double beta = 2.0;
  double breakpoint_m = 600.0;
  double k = 1.0;
  double target_power_w = 0.8e-6;
  double max_power_w = 1.0;

  static FreeSpaceParams macro_defaults();
  static FreeSpaceParams pico_defaults();

  bool operator==(const FreeSpaceParams&) const = default;
};

double freespace_rx_power(double tx_power_w, double distance_m, const FreeSpaceParams& params);

// Transmit power reaching the target at distance r, capped at max_power_w.
double freespace_tx_power(double distance_m, const FreeSpaceParams& params);

}  // namespace hetsim
