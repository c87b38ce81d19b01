#include <random>

#include <gtest/gtest.h>

#include "hetsim/activity_control.hpp"
#include "hetsim/errors.hpp"

using namespace hetsim;

namespace {

const PicoControlState kSleep{EnbMode::kSleep, 0};
const PicoControlState kActive{EnbMode::kActive, 0};

}  // namespace

TEST(Policy, OneThresholdBoundaries) {
  const auto p = ThresholdPolicy::one_threshold(5);
  EXPECT_FALSE(p.is_two_threshold());
  EXPECT_TRUE(p.should_activate(5));
  EXPECT_FALSE(p.should_activate(4));
  EXPECT_TRUE(p.should_deactivate(4));
  EXPECT_FALSE(p.should_deactivate(5));
}

TEST(Policy, TwoThresholdBoundaries) {
  const auto p = ThresholdPolicy::two_threshold(9, 4);
  EXPECT_TRUE(p.should_activate(9));
  EXPECT_FALSE(p.should_activate(8));
  EXPECT_TRUE(p.should_deactivate(4));
  EXPECT_FALSE(p.should_deactivate(5));
}

TEST(Policy, RejectsBadThresholds) {
  EXPECT_THROW(ThresholdPolicy::two_threshold(5, 5), Error);
  EXPECT_THROW(ThresholdPolicy::two_threshold(4, 5), Error);
  EXPECT_THROW(ThresholdPolicy::one_threshold(-1), Error);
  try {
    ThresholdPolicy::two_threshold(5, 5);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPolicy);
  }
}

TEST(Policy, NeverThresholdNeverWakes) {
  const auto p = ThresholdPolicy::one_threshold(ThresholdPolicy::kNever);
  EXPECT_EQ(step_state(kSleep, 1000000, p).mode, EnbMode::kSleep);
}

TEST(StateMachine, SleepGoesThroughBoot) {
  const auto p = ThresholdPolicy::one_threshold(5);
  PicoControlState s = step_state(kSleep, 7, p, 1);
  EXPECT_EQ(s.mode, EnbMode::kBoot);
  s = step_state(s, 0, p, 1);
  EXPECT_EQ(s.mode, EnbMode::kActive);
}

TEST(StateMachine, MultiSlotBoot) {
  const auto p = ThresholdPolicy::one_threshold(1);
  PicoControlState s = step_state(kSleep, 3, p, 3);
  int boot_slots = 0;
  while (s.mode == EnbMode::kBoot) {
    ++boot_slots;
    s = step_state(s, 3, p, 3);
  }
  EXPECT_EQ(boot_slots, 3);
  EXPECT_EQ(s.mode, EnbMode::kActive);
}

TEST(StateMachine, ZeroBootWakesImmediately) {
  EXPECT_EQ(step_state(kSleep, 5, ThresholdPolicy::one_threshold(5), 0), kActive);
}

TEST(StateMachine, ActiveSleepsBelowThreshold) {
  const auto p = ThresholdPolicy::one_threshold(5);
  EXPECT_EQ(step_state(kActive, 4, p), kSleep);
  EXPECT_EQ(step_state(kActive, 5, p), kActive);
}

// Between the thresholds the mode never changes, whatever the history.
TEST(StateMachine, HysteresisHoldsOnRandomSequences) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> thr(1, 30);
  std::bernoulli_distribution start_active(0.5);
  for (int trial = 0; trial < 10000; ++trial) {
    int a = thr(rng), d = thr(rng);
    if (d == a) continue;
    if (d > a) std::swap(a, d);
    const auto p = ThresholdPolicy::two_threshold(a, d);
    PicoControlState s = start_active(rng) ? kActive : kSleep;
    std::uniform_int_distribution<int> between(d + 1, a - 1);
    if (d + 1 > a - 1) continue;
    for (int k = 0; k < 50; ++k) {
      const PicoControlState next = step_state(s, between(rng), p);
      ASSERT_EQ(next, s);
      s = next;
    }
  }
}

TEST(StateMachine, NeverSleepToActiveWithoutBoot) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> count(0, 40);
  std::uniform_int_distribution<int> boot(1, 4);
  const auto p = ThresholdPolicy::two_threshold(15, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int boot_slots = boot(rng);
    PicoControlState s = kSleep;
    for (int k = 0; k < 100; ++k) {
      const PicoControlState next = step_state(s, count(rng), p, boot_slots);
      ASSERT_FALSE(s.mode == EnbMode::kSleep && next.mode == EnbMode::kActive);
      s = next;
    }
  }
}

// A count alternating across a single threshold toggles the pico every
// active period; two thresholds straddling the same counts keep it on.
TEST(StateMachine, OneThresholdOscillates) {
  const auto one = ThresholdPolicy::one_threshold(5);
  const auto two = ThresholdPolicy::two_threshold(5, 2);
  PicoControlState s1 = kSleep, s2 = kSleep;
  int toggles1 = 0, toggles2 = 0;
  for (int k = 0; k < 40; ++k) {
    const int count = k % 2 == 0 ? 5 : 4;
    const PicoControlState n1 = step_state(s1, count, one, 0);
    const PicoControlState n2 = step_state(s2, count, two, 0);
    toggles1 += n1.mode != s1.mode;
    toggles2 += n2.mode != s2.mode;
    s1 = n1;
    s2 = n2;
  }
  EXPECT_EQ(toggles1, 40);
  EXPECT_EQ(toggles2, 1);
}

TEST(CountActive, CountsStrictlyInside) {
  const Cell pico{0, {0.0, 0.0}, 50.0, CellKind::kPico};
  std::vector<UserState> users(4);
  users[0].pos = {10, 0};
  users[0].active = true;
  users[1].pos = {50, 0};
  users[1].active = true;
  users[2].pos = {5, 5};
  users[2].active = false;
  users[3].pos = {-49.9, 0};
  users[3].active = true;
  EXPECT_EQ(count_active_in_range(pico, users), 2);
}
