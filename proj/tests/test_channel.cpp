#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hetsim/channel.hpp"
#include "hetsim/errors.hpp"

using namespace hetsim;

namespace {

constexpr double kUserBandwidth = 20e6 / 1000;

// Link evaluated in linear units (watts, linear gains) rather than dB sums.
double oracle_snr_db(CellKind kind, double d_m, double bandwidth, double shadow_db, const ChannelParams& p) {
  const bool macro = kind == CellKind::kMacro;
  const double tx_w = std::pow(10.0, ((macro ? p.macro_tx_power_dbm : p.pico_tx_power_dbm) - 30.0) / 10.0);
  const double gain = std::pow(10.0, ((macro ? p.macro_antenna_gain_dbi : p.pico_antenna_gain_dbi) +
                                      p.ue_antenna_gain_dbi) / 10.0);
  const double d_km = std::max(d_m, 1.0) / 1000.0;
  const double loss = macro ? std::pow(10.0, 14.07) * std::pow(d_km, 3.67) : std::pow(10.0, 12.81) * std::pow(d_km, 3.76);
  const double shadow = std::pow(10.0, shadow_db / 10.0);
  const double noise_w = p.boltzmann * p.temperature_k * bandwidth;
  return 10.0 * std::log10(tx_w * gain * shadow / loss / noise_w);
}

}  // namespace

TEST(PathLoss, ReferenceValues) {
  EXPECT_NEAR(path_loss_db(CellKind::kMacro, 1000.0), 140.7, 1e-12);
  EXPECT_NEAR(path_loss_db(CellKind::kPico, 1000.0), 128.1, 1e-12);
  EXPECT_NEAR(path_loss_db(CellKind::kMacro, 250.0), 118.60439831826376, 1e-9);
  EXPECT_NEAR(path_loss_db(CellKind::kPico, 25.0), 67.86254432606862, 1e-9);
}

TEST(PathLoss, ClampsBelowOneMeter) {
  EXPECT_DOUBLE_EQ(path_loss_db(CellKind::kMacro, 0.25), path_loss_db(CellKind::kMacro, 1.0));
}

TEST(PathLoss, RejectsNonPositiveDistance) {
  EXPECT_THROW(path_loss_db(CellKind::kPico, 0.0), Error);
  try {
    path_loss_db(CellKind::kMacro, -1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPositiveDistance);
  }
}

TEST(Noise, ThermalNoiseAtUserShare) {
  EXPECT_NEAR(thermal_noise_dbm(kUserBandwidth, ChannelParams{}), -130.9648872375883, 1e-9);
}

TEST(Link, MacroAt250m) {
  const LinkBudget link = evaluate_link(CellKind::kMacro, 250.0, kUserBandwidth, 0.0, ChannelParams{});
  EXPECT_NEAR(10.0 * std::log10(link.snr_linear), 72.36048891932454, 1e-9);
  EXPECT_NEAR(link.capacity_bps, 480752.6838773229, 1e-6);
}

TEST(Link, PicoAt25m) {
  const LinkBudget link = evaluate_link(CellKind::kPico, 25.0, kUserBandwidth, 0.0, ChannelParams{});
  EXPECT_NEAR(10.0 * std::log10(link.snr_linear), 98.10234291151968, 1e-9);
  EXPECT_NEAR(link.capacity_bps, 651777.8581885692, 1e-6);
}

TEST(Link, ShadowShiftsReceivedPower) {
  const ChannelParams p;
  const LinkBudget a = evaluate_link(CellKind::kMacro, 300.0, kUserBandwidth, 0.0, p);
  const LinkBudget b = evaluate_link(CellKind::kMacro, 300.0, kUserBandwidth, -6.5, p);
  EXPECT_NEAR(a.rx_power_dbm - b.rx_power_dbm, 6.5, 1e-12);
}

TEST(Link, MatchesLinearOracleOnRandomLinks) {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> dist(0.5, 700.0);
  std::normal_distribution<double> shadow(0.0, 9.0);
  std::bernoulli_distribution macro(0.5);
  const ChannelParams p;
  for (int i = 0; i < 1000; ++i) {
    const CellKind kind = macro(rng) ? CellKind::kMacro : CellKind::kPico;
    const double d = dist(rng), s = shadow(rng);
    const LinkBudget link = evaluate_link(kind, d, kUserBandwidth, s, p);
    ASSERT_NEAR(10.0 * std::log10(link.snr_linear), oracle_snr_db(kind, d, kUserBandwidth, s, p), 1e-9);
  }
}

TEST(Shannon, ZeroSnrGivesZero) { EXPECT_EQ(shannon_capacity(20e3, 0.0), 0.0); }

TEST(Shannon, UnitSnrGivesBandwidth) { EXPECT_DOUBLE_EQ(shannon_capacity(20e3, 1.0), 20e3); }

TEST(Shadow, StatisticsMatchKind) {
  const ChannelParams p;
  Rng rng(4);
  double sum = 0.0, sq = 0.0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    const double v = sample_shadow_db(CellKind::kPico, p, rng);
    sum += v;
    sq += v * v;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.15);
  EXPECT_NEAR(std::sqrt(sq / n), 10.0, 0.15);
}

TEST(Shadow, OneDrawPerCallForEitherKind) {
  const ChannelParams p;
  Rng a(8), b(8);
  sample_shadow_db(CellKind::kMacro, p, a);
  sample_shadow_db(CellKind::kPico, p, b);
  EXPECT_EQ(a(), b());
}

TEST(Bandwidth, EqualShare) {
  EXPECT_DOUBLE_EQ(user_bandwidth(20e6, 1000), 20e3);
  EXPECT_THROW(user_bandwidth(20e6, 0), Error);
}

TEST(FreeSpace, ReceivedPowerAtBreakpoint) {
  const FreeSpaceParams p = FreeSpaceParams::macro_defaults();
  EXPECT_NEAR(freespace_rx_power(1.0, 600.0, p), 6.944444444444445e-07, 1e-20);
}

TEST(FreeSpace, PicoTransmitPower) {
  EXPECT_NEAR(freespace_tx_power(50.0, FreeSpaceParams::pico_defaults()), 0.0012070915677580892, 1e-15);
}

TEST(FreeSpace, TransmitPowerIsCapped) {
  const FreeSpaceParams p = FreeSpaceParams::macro_defaults();
  EXPECT_EQ(freespace_tx_power(5000.0, p), p.max_power_w);
}

TEST(FreeSpace, RoundTripOffClamp) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> dist(1.0, 400.0);
  for (const FreeSpaceParams& p : {FreeSpaceParams::macro_defaults(), FreeSpaceParams::pico_defaults()}) {
    for (int i = 0; i < 1000; ++i) {
      const double r = dist(rng);
      const double tx = freespace_tx_power(r, p);
      if (tx >= p.max_power_w) continue;
      ASSERT_NEAR(freespace_rx_power(tx, r, p) / p.target_power_w, 1.0, 1e-12);
    }
  }
}

TEST(FreeSpace, RejectsNonPositiveDistance) {
  EXPECT_THROW(freespace_tx_power(0.0, FreeSpaceParams::pico_defaults()), Error);
}
