#include "ratcurve/gw_counts.hpp"

#include <gtest/gtest.h>

#include <map>
#include <string>

namespace ratcurve {
namespace {

// Plain recursion over a hand-built Pascal triangle in native 128-bit
// integers; exact for d <= 8.
std::map<int, __int128> oracle_counts(int dmax) {
  std::vector<std::vector<__int128>> pascal(3 * dmax);
  for (std::size_t n = 0; n < pascal.size(); ++n) {
    pascal[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  auto c = [&](int n, int k) -> __int128 {
    if (k < 0 || k > n) return 0;
    return pascal[n][k];
  };
  std::map<int, __int128> n_of{{1, 1}};
  for (int d = 2; d <= dmax; ++d) {
    __int128 total = 0;
    for (int i = 1; i < d; ++i) {
      const __int128 j = d - i;
      total += n_of[i] * n_of[d - i] *
               (i * i * j * j * c(3 * d - 4, 3 * i - 2) - i * i * i * j * c(3 * d - 4, 3 * i - 1));
    }
    n_of[d] = total;
  }
  return n_of;
}

std::string to_string128(__int128 v) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  } while (v > 0);
  return s;
}

TEST(GWCountsTest, PublishedValues) {
  GWTable table;
  EXPECT_EQ(compute_N(1, table), 1);
  EXPECT_EQ(compute_N(3, table), 12);
  EXPECT_EQ(compute_N(8, table), ExactInt("13525751027392"));
}

TEST(GWCountsTest, NTable) {
  EXPECT_EQ(n_table(2).values().size(), 2u);
  EXPECT_EQ(n_table(2).at(2), 1);

  const GWTable five = n_table(5);
  const std::vector<ExactInt> expected{1, 1, 12, 620, 87304};
  ASSERT_EQ(five.max_degree(), 5);
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(five.at(d), expected[d - 1]);

  EXPECT_EQ(n_table(7).at(7), ExactInt("14616808192"));
}

TEST(GWCountsTest, MatchesNativeOracle) {
  const auto oracle = oracle_counts(8);
  const GWTable table = n_table(8);
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(to_decimal(table.at(d)), to_string128(oracle.at(d)));
}

TEST(GWCountsTest, LargeDegree) {
  const GWTable table = n_table(30);
  EXPECT_EQ(table.at(12), ExactInt("482113680618029292368686080"));
  EXPECT_EQ(to_decimal(table.at(30)),
            "10480191498450077690671246927179710304246219778995953860074075465388686636"
            "875488974417617104702916473651200");
}

TEST(GWCountsTest, RejectsNonPositiveDegree) {
  GWTable table;
  EXPECT_THROW(compute_N(0, table), std::invalid_argument);
  EXPECT_THROW(compute_N(-4, table), std::invalid_argument);
  EXPECT_THROW(n_table(0), std::invalid_argument);
}

TEST(GWCountsTest, ReadsBeyondTableThrow) {
  const GWTable table = n_table(3);
  EXPECT_THROW((void)table.at(4), std::out_of_range);
  EXPECT_THROW((void)table.at(0), std::out_of_range);
  EXPECT_THROW((void)GWTable{}.at(1), std::out_of_range);
}

TEST(GWCountsTest, DegreeTwoSingleTerm) {
  const GWTable table = n_table(1);
  // 1*1*(C(2,1) - C(2,2))
  EXPECT_EQ(recursion_summand(2, 1, table), 1);
}

TEST(GWCountsTest, SumIsIndependentOfIterationOrder) {
  const GWTable table = n_table(20);
  for (int d = 2; d <= 20; ++d) {
    ExactInt forward = 0;
    ExactInt backward = 0;
    for (int i = 1; i < d; ++i) forward += recursion_summand(d, i, table);
    for (int i = d - 1; i >= 1; --i) backward += recursion_summand(d, i, table);
    EXPECT_EQ(forward, backward);
    EXPECT_EQ(forward, table.at(d));
  }
}

TEST(GWCountsTest, TableInvariants) {
  GWTable grown;
  for (int d = 1; d <= 25; d += 3) compute_N(d, grown);
  const GWTable fresh = n_table(grown.max_degree());
  ASSERT_EQ(grown.max_degree(), fresh.max_degree());
  EXPECT_EQ(grown.at(1), 1);
  for (int d = 1; d <= fresh.max_degree(); ++d) {
    EXPECT_GT(fresh.at(d), 0);
    EXPECT_EQ(grown.at(d), fresh.at(d));
  }
}

TEST(GWCountsTest, ExtendDoesNotShrink) {
  GWTable table = n_table(6);
  table.extend_to(3);
  EXPECT_EQ(table.max_degree(), 6);
}

}  // namespace
}  // namespace ratcurve
