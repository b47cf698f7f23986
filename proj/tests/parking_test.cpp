#include "lucky/parking.hpp"

#include <random>

#include <gtest/gtest.h>

#include "lucky/errors.hpp"
#include "support/oracles.hpp"

namespace lucky {
namespace {

using Assignment = std::vector<std::optional<int>>;

TEST(PreferenceListTest, RejectsOutOfRangeAndEmpty) {
  EXPECT_THROW(PreferenceList({}), InputError);
  EXPECT_THROW(PreferenceList({0, 1}), InputError);
  EXPECT_THROW(PreferenceList({1, 3}), InputError);
  EXPECT_THROW(PreferenceList({-1}), InputError);
  EXPECT_NO_THROW(PreferenceList({2, 2}));
}

TEST(SimulateTest, FigureParkingFunction) {
  const auto out = simulate(PreferenceList{3, 1, 1, 2});
  EXPECT_EQ(out.assignment, (Assignment{3, 1, 2, 4}));
  EXPECT_TRUE(out.is_pf);
  EXPECT_EQ(out.lucky, (std::vector<bool>{true, true, false, false}));
}

TEST(SimulateTest, FailedCarLeavesAndOthersStay) {
  const auto out = simulate(PreferenceList{2, 1, 4, 4});
  EXPECT_EQ(out.assignment, (Assignment{2, 1, 4, std::nullopt}));
  EXPECT_FALSE(out.is_pf);
  EXPECT_FALSE(out.lucky[3]);
}

TEST(SimulateTest, CarsAfterAFailureStillPark) {
  // Car 2 fails at spot 3, car 3 still takes spot 1.
  const auto out = simulate(PreferenceList{3, 3, 1});
  EXPECT_EQ(out.assignment, (Assignment{3, std::nullopt, 1}));
  EXPECT_EQ(out.lucky_count(), 2u);
}

TEST(SimulateTest, IdentityPermutation) {
  const auto out = simulate(PreferenceList{1, 2, 3, 4, 5});
  EXPECT_EQ(out.assignment, (Assignment{1, 2, 3, 4, 5}));
  EXPECT_TRUE(out.is_pf);
}

TEST(LuckyCountTest, Examples) {
  EXPECT_EQ(lucky_count(PreferenceList{3, 1, 1, 2}), 2u);
  EXPECT_EQ(lucky_count(PreferenceList{2, 1, 4, 4}), 3u);
  EXPECT_EQ(lucky_count(PreferenceList{1, 1}), 1u);
  EXPECT_EQ(lucky_count(PreferenceList{4, 2, 3, 1}), 4u);
}

TEST(IsParkingFunctionTest, Examples) {
  EXPECT_TRUE(is_parking_function(PreferenceList{3, 1, 1, 2}));
  EXPECT_FALSE(is_parking_function(PreferenceList{2, 1, 4, 4}));
  for (int n = 2; n <= 6; ++n) {
    EXPECT_FALSE(is_parking_function(PreferenceList(std::vector<int>(n, n)))) << n;
  }
}

TEST(SimulateTest, OrderSensitive) {
  const auto a = simulate(PreferenceList{1, 1, 2});
  const auto b = simulate(PreferenceList{2, 1, 1});
  EXPECT_EQ(a.assignment, (Assignment{1, 2, 3}));
  EXPECT_EQ(b.assignment, (Assignment{2, 1, 3}));
  EXPECT_EQ(a.lucky_count(), 1u);
  EXPECT_EQ(b.lucky_count(), 2u);
}

// Exhaustive cross-check against the test oracle and the sorted-prefix
// characterization for n <= 6.
TEST(SimulateTest, AgreesWithOraclesExhaustively) {
  for (int n = 1; n <= 6; ++n) {
    testing::for_each_list(n, [&](const std::vector<int>& prefs) {
      const PreferenceList list(prefs);
      const auto out = simulate(list);
      const auto oracle = testing::park_oracle(prefs);
      ASSERT_EQ(out.lucky_count(), static_cast<std::size_t>(oracle.lucky));
      ASSERT_EQ(out.is_pf, oracle.all_parked);
      ASSERT_EQ(out.is_pf, satisfies_sorted_prefix_criterion(list));
      const std::vector<std::uint8_t> small(prefs.begin(), prefs.end());
      const auto fast = park_summary(small);
      ASSERT_EQ(fast.lucky, out.lucky_count());
      ASSERT_EQ(fast.is_pf, out.is_pf);
    });
  }
}

TEST(SimulateTest, OutcomeInvariantsOnRandomLists) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::uniform_int_distribution<int> spot(1, n);
    std::vector<int> prefs(n);
    for (auto& p : prefs) p = spot(rng);
    const auto out = simulate(PreferenceList(prefs));
    ASSERT_TRUE(out.lucky[0]);
    std::vector<bool> used(n + 1, false);
    bool all_parked = true;
    for (int i = 0; i < n; ++i) {
      if (!out.assignment[i]) {
        all_parked = false;
        ASSERT_FALSE(out.lucky[i]);
        continue;
      }
      const int s = *out.assignment[i];
      ASSERT_FALSE(used[s]);
      used[s] = true;
      ASSERT_GE(s, prefs[i]);
      ASSERT_EQ(out.lucky[i], s == prefs[i]);
    }
    ASSERT_EQ(out.is_pf, all_parked);
  }
}

TEST(ParkSummaryTest, HandlesWideStreets) {
  std::vector<std::uint8_t> prefs(kMaxSummaryLength);
  for (std::size_t i = 0; i < prefs.size(); ++i) prefs[i] = static_cast<std::uint8_t>(prefs.size() - i);
  const auto s = park_summary(prefs);
  EXPECT_EQ(s.lucky, kMaxSummaryLength);
  EXPECT_TRUE(s.is_pf);
  std::fill(prefs.begin(), prefs.end(), static_cast<std::uint8_t>(kMaxSummaryLength));
  const auto t = park_summary(prefs);
  EXPECT_EQ(t.lucky, 1);
  EXPECT_FALSE(t.is_pf);
}

}  // namespace
}  // namespace lucky
