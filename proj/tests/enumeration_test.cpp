#include "lucky/enumeration.hpp"

#include <gtest/gtest.h>

#include "lucky/errors.hpp"
#include "support/oracles.hpp"

namespace lucky {
namespace {

using Lists = std::vector<std::vector<std::uint8_t>>;

std::vector<BigCount> big(std::initializer_list<int> values) {
  return {values.begin(), values.end()};
}

Lists collect(const ListRange& range) {
  Lists out;
  for (const auto& prefs : range) out.push_back(prefs);
  return out;
}

TEST(ListRangeTest, SmallSpacesInLexicographicOrder) {
  EXPECT_EQ(collect(ListRange(1)), (Lists{{1}}));
  EXPECT_EQ(collect(ListRange(2)), (Lists{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  const Lists three = collect(ListRange(3));
  ASSERT_EQ(three.size(), 27u);
  EXPECT_EQ(three.front(), (std::vector<std::uint8_t>{1, 1, 1}));
  EXPECT_EQ(three.back(), (std::vector<std::uint8_t>{3, 3, 3}));
  EXPECT_TRUE(std::is_sorted(three.begin(), three.end()));
  EXPECT_EQ(std::adjacent_find(three.begin(), three.end()), three.end());
}

TEST(ListRangeTest, SizeBounds) {
  EXPECT_THROW(ListRange(0), RangeError);
  EXPECT_THROW(ListRange(10), RangeError);
  EXPECT_NO_THROW(ListRange(10, EnumerationOptions{10, 1}));
  EXPECT_THROW(ListRange(16, EnumerationOptions{99, 1}), RangeError);
  EXPECT_THROW(ListRange(3, 5, 4), RangeError);
  EXPECT_THROW(ListRange(3, 0, 28), RangeError);
}

TEST(ListRangeTest, SplitIsAContiguousPartition) {
  const ListRange whole(4);
  const Lists expected = collect(whole);
  for (std::size_t parts : {1u, 2u, 3u, 7u, 256u, 300u}) {
    Lists joined;
    std::uint64_t next = 0;
    for (const auto& sub : whole.split(parts)) {
      EXPECT_EQ(sub.first(), next);
      next = sub.last();
      for (const auto& prefs : sub) joined.push_back(prefs);
    }
    EXPECT_EQ(next, whole.last());
    EXPECT_EQ(joined, expected) << parts;
  }
}

TEST(ListRangeTest, UnrankMatchesIteration) {
  std::uint64_t rank = 0;
  for (const auto& prefs : ListRange(4)) ASSERT_EQ(unrank_list(4, rank++), prefs);
}

TEST(LuckyDistributionTest, SmallCases) {
  const auto one = lucky_distribution(1);
  EXPECT_EQ(one.all_lists, big({0, 1}));
  EXPECT_EQ(one.pf_only, big({0, 1}));
  const auto two = lucky_distribution(2);
  EXPECT_EQ(two.all_lists, big({0, 2, 2}));
  EXPECT_EQ(two.pf_only, big({0, 1, 2}));
}

// Tallies for n <= 5 recomputed with the independent parking oracle.
TEST(LuckyDistributionTest, MatchesOracleTallies) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<BigCount> all(n + 1), pf(n + 1);
    testing::for_each_list(n, [&](const std::vector<int>& prefs) {
      const auto r = testing::park_oracle(prefs);
      all[r.lucky] += 1;
      if (r.all_parked) pf[r.lucky] += 1;
    });
    const auto d = lucky_distribution(n);
    EXPECT_EQ(d.all_lists, all) << n;
    EXPECT_EQ(d.pf_only, pf) << n;
  }
}

TEST(LuckyDistributionTest, Invariants) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto d = lucky_distribution(n);
    BigCount all = 0, pf = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      all += d.all_lists[k];
      pf += d.pf_only[k];
      EXPECT_LE(d.pf_only[k], d.all_lists[k]);
    }
    EXPECT_EQ(all, BigCount(list_count(n)));
    EXPECT_EQ(pf, boost::multiprecision::pow(BigCount(n + 1), static_cast<unsigned>(n - 1)));
    EXPECT_EQ(d.all_lists[0], 0);
    EXPECT_EQ(d.pf_only[0], 0);
  }
}

TEST(CountLuckyTest, BruteForceValues) {
  EXPECT_EQ(count_lucky_n_minus_1(2), 2);
  EXPECT_EQ(count_lucky_n_minus_1(3), 16);
  EXPECT_EQ(count_lucky_n_minus_1(4), 116);
  EXPECT_EQ(count_lucky_n_minus_1(5), 888);
  EXPECT_THROW(count_lucky_n_minus_1(1), DomainError);
  EXPECT_THROW(count_lucky_n_minus_1(0), DomainError);
}

TEST(PfPolynomialTest, SmallCases) {
  EXPECT_EQ(pf_lucky_polynomial(1), LuckyPolynomial(big({0, 1})));
  EXPECT_EQ(pf_lucky_polynomial(2), LuckyPolynomial(big({0, 1, 2})));
  EXPECT_EQ(pf_lucky_polynomial(3).evaluate(1), 16);
  EXPECT_EQ(pf_lucky_polynomial(4).evaluate(1), 125);
  EXPECT_EQ(pf_lucky_polynomial(3).coefficient(0), 0);
}

TEST(SplitByPfTest, HalvesOfL) {
  auto check = [](std::size_t n, int half) {
    const auto s = split_by_pf(n);
    EXPECT_EQ(s.pf_part, half) << n;
    EXPECT_EQ(s.non_pf_part, half) << n;
  };
  check(2, 1);
  check(3, 8);
  check(4, 58);
  EXPECT_THROW(split_by_pf(1), DomainError);
}

TEST(CompetingSplitTest, Values) {
  const auto two = competing_car_split(2);
  EXPECT_EQ(two.n_count, 0);
  EXPECT_EQ(two.m_count, 2);
  const auto three = competing_car_split(3);
  EXPECT_EQ(three.n_count, 6);
  EXPECT_EQ(three.m_count, 10);
  EXPECT_THROW(competing_car_split(1), DomainError);
}

TEST(CompetingSplitTest, RecurrencesHoldBruteForce) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto cur = competing_car_split(n);
    const auto prev = competing_car_split(n - 1);
    EXPECT_EQ(cur.n_count + cur.m_count, count_lucky_n_minus_1(n));
    EXPECT_EQ(cur.n_count, BigCount(n) * count_lucky_n_minus_1(n - 1));
    EXPECT_EQ(cur.m_count, BigCount(n) * prev.m_count + 2 * BigCount(testing::factorial_u64(n - 1)));
  }
}

TEST(CompetingSplitTest, MalformedTallyIsRejected) {
  auto t = tally_all(3);
  t.near_lucky_malformed = 1;
  EXPECT_THROW(to_competing_split(t), ConsistencyError);
}

TEST(TallyTest, PartitionInvariance) {
  const std::size_t n = 5;
  const auto whole = tally_range(ListRange(n));
  for (std::size_t parts : {2u, 5u, 13u}) {
    EnumerationTally sum(n);
    for (const auto& sub : ListRange(n).split(parts)) sum += tally_range(sub);
    EXPECT_EQ(sum, whole) << parts;
  }
  for (unsigned threads : {1u, 2u, 3u, 8u}) {
    EXPECT_EQ(tally_all(n, EnumerationOptions{9, threads}), whole) << threads;
  }
}

TEST(TallyTest, EmptyRangeIsZero) {
  EXPECT_EQ(tally_range(ListRange(3, 4, 4)), EnumerationTally(3));
}

TEST(TallyTest, MergeRejectsSizeMismatch) {
  EnumerationTally a(3);
  EXPECT_THROW(a += EnumerationTally(4), ConsistencyError);
}

}  // namespace
}  // namespace lucky
