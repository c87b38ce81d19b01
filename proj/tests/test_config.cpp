#include <gtest/gtest.h>

#include "hetsim/config.hpp"
#include "hetsim/errors.hpp"

using namespace hetsim;

namespace {

ErrorCode code_of(const std::string& text, std::vector<std::string> overrides = {}) {
  try {
    parse_scenario(text, overrides);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::kIoError;
}

}  // namespace

TEST(Config, MinimalDocumentTakesDefaults) {
  const Scenario s = parse_scenario(R"({"topology": "udc"})");
  EXPECT_EQ(s, Scenario{});
  EXPECT_EQ(s.n_users, 1000);
  EXPECT_EQ(s.n_picos, 28);
  EXPECT_EQ(s.pico_power.p_sleep, 8.6);
  EXPECT_EQ(s.channel.system_bandwidth_hz, 20e6);
}

TEST(Config, EqualThresholdsRejected) {
  EXPECT_EQ(code_of(R"({"policy": {"t_activate": 5, "t_deactivate": 5}})"), ErrorCode::kValidationError);
}

TEST(Config, TooManyHotspotUsers) {
  EXPECT_EQ(code_of(R"({"n_hotspot": 1500, "n_users": 1000})"), ErrorCode::kValidationError);
}

TEST(Config, UnknownKeysRejected) {
  EXPECT_EQ(code_of(R"({"n_user": 10})"), ErrorCode::kValidationError);
  EXPECT_EQ(code_of(R"({"power": {"pico": {"psleep": 1}}})"), ErrorCode::kValidationError);
}

TEST(Config, ErrorMessageNamesKey) {
  try {
    parse_scenario(R"({"power": {"pico": {"p_sleep": "x"}}})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("power.pico.p_sleep"), std::string::npos) << e.what();
  }
}

TEST(Config, MalformedText) {
  EXPECT_EQ(code_of("{not json"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("[1, 2]"), ErrorCode::kParseError);
}

TEST(Config, UnknownTopology) { EXPECT_EQ(code_of(R"({"topology": "hex"})"), ErrorCode::kValidationError); }

TEST(Config, HotspotOnMonetIsRejected) {
  EXPECT_EQ(code_of(R"({"topology": "monet", "n_hotspot": 10})"), ErrorCode::kValidationError);
  Scenario s;
  s.topology = NetworkKind::kMoNet;
  s.n_hotspot = 10;
  try {
    validate(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoPicosForHotspot);
  }
}

TEST(Config, OverridesApplyBeforeValidation) {
  const std::vector<std::string> overrides{"policy.t_activate=9", "policy.t_deactivate=4", "topology=coe",
                                           "power.pico.p_sleep=0"};
  const Scenario s = parse_scenario("{}", overrides);
  EXPECT_EQ(s.policy, ThresholdPolicy::two_threshold(9, 4));
  EXPECT_EQ(s.topology, NetworkKind::kCoe);
  EXPECT_EQ(s.pico_power.p_sleep, 0.0);
  EXPECT_EQ(code_of("{}", {"policy.t_deactivate=20"}), ErrorCode::kValidationError);
  EXPECT_EQ(code_of("{}", {"no_equals_sign"}), ErrorCode::kParseError);
  EXPECT_EQ(code_of("{}", {"bogus.key=1"}), ErrorCode::kValidationError);
}

TEST(Config, InfiniteThreshold) {
  EXPECT_EQ(parse_scenario(R"({"policy": {"t_activate": "inf"}})").policy.t_activate(), ThresholdPolicy::kNever);
}

TEST(Config, RoundTripDefaults) {
  const Scenario s;
  EXPECT_EQ(parse_scenario(serialize_scenario(s)), s);
}

TEST(Config, RoundTripVariedScenarios) {
  Rng rng(99);
  const NetworkKind kinds[] = {NetworkKind::kMoNet, NetworkKind::kCoe, NetworkKind::kUdc,
                               NetworkKind::kMoNetWithCoeUsers, NetworkKind::kMoNetWithUdcUsers};
  for (int i = 0; i < 200; ++i) {
    Scenario s;
    s.topology = kinds[i % 5];
    s.n_users = 100 + static_cast<int>(rng() % 900);
    s.n_hotspot = s.topology == NetworkKind::kMoNet ? 0 : static_cast<int>(rng() % s.n_users);
    s.seed = rng();
    s.policy = i % 2 ? ThresholdPolicy::one_threshold(static_cast<int>(rng() % 30))
                     : ThresholdPolicy::two_threshold(10 + static_cast<int>(rng() % 10), static_cast<int>(rng() % 10));
    s.pico_power.p_sleep = uniform_real(rng, 0.0, 9.0);
    s.channel.macro_shadow_std_db = uniform_real(rng, 0.0, 12.0);
    s.activity.uniform_prob = uniform_real(rng, 0.0, 1.0);
    s.mobility.hotspot_placement = i % 3 ? HotspotPlacement::kCommute : HotspotPlacement::kInCell;
    s.schedule.start_slots = {0, 1 + static_cast<int>(rng() % 100)};
    s.legacy_mode = i % 7 == 0;
    s.legacy_pico.alpha = uniform_real(rng, 1.5, 3.0);
    ASSERT_EQ(parse_scenario(serialize_scenario(s)), s) << serialize_scenario(s);
  }
}

TEST(Config, MissingFile) {
  try {
    load_scenario("/nonexistent/scenario.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
    EXPECT_FALSE(e.is_config_error());
  }
}
