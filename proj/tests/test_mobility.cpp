#include <gtest/gtest.h>

#include "hetsim/errors.hpp"
#include "hetsim/mobility.hpp"

using namespace hetsim;

namespace {

const Topology& coe() {
  static const Topology t = build_coe(500.0, 50.0, 28);
  return t;
}

}  // namespace

TEST(Mobility, UniformUserStartsInsideMacro) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const UserState u = init_user(i, UserKind::kUniform, coe(), WorkSchedule{}, MobilityParams{}, rng);
    EXPECT_LE(distance(u.pos, coe().macro().center), 500.0 + 1e-9);
    EXPECT_GE(u.speed, 10.0);
    EXPECT_LE(u.speed, 20.0);
    EXPECT_FALSE(u.my_pico.has_value());
    EXPECT_FALSE(u.work_start.has_value());
  }
}

TEST(Mobility, HotspotUserGetsScheduleAndHome) {
  Rng rng(2);
  const WorkSchedule schedule;
  for (int i = 0; i < 200; ++i) {
    const UserState u = init_user(i, UserKind::kHotspot, coe(), schedule, MobilityParams{}, rng);
    ASSERT_TRUE(u.my_pico && u.work_start);
    EXPECT_GE(*u.my_pico, 0);
    EXPECT_LT(*u.my_pico, 28);
    EXPECT_NE(std::find(schedule.start_slots.begin(), schedule.start_slots.end(), *u.work_start),
              schedule.start_slots.end());
    EXPECT_EQ(u.work_len, 375);
  }
}

TEST(Mobility, InCellPlacementStartsAtWork) {
  Rng rng(3);
  MobilityParams params;
  params.hotspot_placement = HotspotPlacement::kInCell;
  const UserState u = init_user(0, UserKind::kHotspot, coe(), WorkSchedule{}, params, rng);
  EXPECT_TRUE(u.at_work(0));
  EXPECT_LE(distance(u.pos, coe().pico(*u.my_pico).center), 50.0 + 1e-9);
  EXPECT_LE(u.speed, 2.0);
}

TEST(Mobility, HotspotWithoutPicosFails) {
  Rng rng(4);
  try {
    init_user(0, UserKind::kHotspot, build_monet(500.0), WorkSchedule{}, MobilityParams{}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoPicosForHotspot);
  }
}

TEST(Mobility, StepMovesAtMostSpeed) {
  Rng rng(5);
  UserState u = init_user(0, UserKind::kUniform, coe(), WorkSchedule{}, MobilityParams{}, rng);
  for (int slot = 0; slot < 500; ++slot) {
    const Point2D before = u.pos;
    const double speed = u.speed;
    u = step_user(u, slot, coe(), MobilityParams{}, rng);
    ASSERT_LE(distance(before, u.pos), speed + 1e-9);
    ASSERT_LE(distance(u.pos, coe().macro().center), 500.0 + 1e-6);
  }
}

TEST(Mobility, SnapsOntoNearbyDestination) {
  Rng rng(6);
  UserState u;
  u.pos = {500, 500};
  u.dest = {505, 500};
  u.speed = 10.0;
  u.velocity = {10.0, 0.0};
  u = step_user(u, 0, coe(), MobilityParams{}, rng);
  EXPECT_EQ(u.pos, (Point2D{505, 500}));
  EXPECT_NE(u.dest, u.pos);
}

TEST(Mobility, HotspotReachesHomeAndStays) {
  Rng rng(7);
  UserState u = init_user(0, UserKind::kHotspot, coe(), WorkSchedule{{0}, 375}, MobilityParams{}, rng);
  const Cell& home = coe().pico(*u.my_pico);
  for (int slot = 0; slot < 375; ++slot) u = step_user(u, slot, coe(), MobilityParams{}, rng);
  EXPECT_LE(distance(u.pos, home.center), 50.0 + 1e-9);
  EXPECT_LE(u.speed, 2.0);
  // After work ends the user heads back into the macro cell at roaming speed.
  u = step_user(u, 375, coe(), MobilityParams{}, rng);
  EXPECT_GE(u.speed, 10.0);
}

TEST(Mobility, ActivityProbabilities) {
  const ActivityParams params;
  UserState uniform, hotspot;
  hotspot.kind = UserKind::kHotspot;
  Rng rng(8);
  int a = 0, b = 0, c = 0;
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    a += draw_activity(uniform, true, params, rng);
    b += draw_activity(hotspot, true, params, rng);
    c += draw_activity(hotspot, false, params, rng);
  }
  EXPECT_NEAR(static_cast<double>(a) / n, 0.4, 0.01);
  EXPECT_NEAR(static_cast<double>(b) / n, 0.8, 0.01);
  EXPECT_NEAR(static_cast<double>(c) / n, 0.4, 0.01);
}
