#include "hetsim/channel.hpp"

#include <cmath>

#include "hetsim/errors.hpp"

namespace hetsim {

double path_loss_db(CellKind kind, double distance_m) {
  if (!(distance_m > 0.0)) {
    throw Error(ErrorCode::kNonPositiveDistance, "path loss needs distance > 0, got " + std::to_string(distance_m));
  }
  const double d_km = std::max(distance_m, kMinPathLossDistance) / 1000.0;
  switch (kind) {
    case CellKind::kMacro: return 140.7 + 36.7 * std::log10(d_km);
    case CellKind::kPico: return 128.1 + 37.6 * std::log10(d_km);
  }
  return 0.0;
}

double sample_shadow_db(CellKind kind, const ChannelParams& params, Rng& rng) {
  const double z = std::normal_distribution<double>(0.0, 1.0)(rng);
  return z * (kind == CellKind::kMacro ? params.macro_shadow_std_db : params.pico_shadow_std_db);
}

double thermal_noise_dbm(double bandwidth_hz, const ChannelParams& params) {
  return 10.0 * std::log10(params.boltzmann * params.temperature_k * bandwidth_hz / 1e-3);
}

double shannon_capacity(double bandwidth_hz, double snr_linear) { return bandwidth_hz * std::log2(1.0 + snr_linear); }

LinkBudget evaluate_link(CellKind kind, double distance_m, double bandwidth_hz, double shadow_db,
                         const ChannelParams& params) {
  LinkBudget link;
  link.path_loss_db = path_loss_db(kind, distance_m);
  link.shadow_db = shadow_db;
  link.bandwidth_hz = bandwidth_hz;
  const double tx_dbm = kind == CellKind::kMacro ? params.macro_tx_power_dbm : params.pico_tx_power_dbm;
  const double gain_dbi = kind == CellKind::kMacro ? params.macro_antenna_gain_dbi : params.pico_antenna_gain_dbi;
  link.rx_power_dbm = tx_dbm + gain_dbi + params.ue_antenna_gain_dbi - link.path_loss_db + shadow_db;
  link.noise_power_dbm = thermal_noise_dbm(bandwidth_hz, params);
  link.snr_linear = std::pow(10.0, (link.rx_power_dbm - link.noise_power_dbm) / 10.0);
  link.capacity_bps = shannon_capacity(bandwidth_hz, link.snr_linear);
  return link;
}

double user_bandwidth(double total_bandwidth_hz, int n_total_users) {
  if (n_total_users <= 0) throw Error(ErrorCode::kZeroUsers, "bandwidth share needs at least one user");
  return total_bandwidth_hz / n_total_users;
}

FreeSpaceParams FreeSpaceParams::macro_defaults() { return {2.0, 2.0, 600.0, 1.0, 0.8e-6, 1.0}; }

FreeSpaceParams FreeSpaceParams::pico_defaults() { return {1.8, 1.8, 300.0, 1.0, 0.8e-6, 1.0}; }

namespace {

double freespace_attenuation(double distance_m, const FreeSpaceParams& p) {
  if (!(distance_m > 0.0)) {
    throw Error(ErrorCode::kNonPositiveDistance, "free-space model needs distance > 0");
  }
  return std::pow(distance_m, p.alpha) * std::pow(1.0 + distance_m / p.breakpoint_m, p.beta);
}

}  // namespace

double freespace_rx_power(double tx_power_w, double distance_m, const FreeSpaceParams& params) {
  return tx_power_w * params.k / freespace_attenuation(distance_m, params);
}

double freespace_tx_power(double distance_m, const FreeSpaceParams& params) {
  return std::min(params.max_power_w, params.target_power_w * freespace_attenuation(distance_m, params) / params.k);
}

}  // namespace hetsim
