#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pcglab/intervals.hpp"

using namespace pcglab;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("2.25"), Rational(9, 4));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), FormatError);
  EXPECT_THROW(parse_rational("abc"), FormatError);
  EXPECT_THROW(parse_rational(""), FormatError);
}

TEST(Intervals, ParseAndPrint) {
  auto s = IntervalSet::parse("[3,7] U [25,25]");
  EXPECT_EQ(s.count(), 2u);
  EXPECT_EQ(s.to_string(), "[3,7] U [25,25]");
  EXPECT_TRUE(s.contains(25));
  EXPECT_FALSE(s.contains(Rational(49, 2)));
  auto h = IntervalSet::parse("(1/2, 4]");
  EXPECT_FALSE(h.contains(Rational(1, 2)));
  EXPECT_TRUE(h.contains(4));
  EXPECT_EQ(IntervalSet::parse("{}").count(), 0u);
  EXPECT_EQ(IntervalSet{}.to_string(), "{}");
  EXPECT_THROW(IntervalSet::parse("[5,3]"), FormatError);
  EXPECT_THROW(IntervalSet::parse("[1,2"), FormatError);
  EXPECT_THROW(IntervalSet::parse("[-1,2]"), FormatError);
}

TEST(Intervals, NormalizationMerges) {
  auto s = IntervalSet::parse("[4,6] U [1,3] U (3,4) U [10,12)");
  EXPECT_EQ(s.to_string(), "[1,6] U [10,12)");
  auto gap = IntervalSet::parse("[1,2) U (2,3]");
  EXPECT_EQ(gap.count(), 2u);
  EXPECT_FALSE(gap.contains(2));
  auto widen = IntervalSet::parse("[1,5) U [2,5]");
  EXPECT_EQ(widen.to_string(), "[1,5]");
  auto keep = IntervalSet::parse("[1,5] U [2,5)");
  EXPECT_EQ(keep.to_string(), "[1,5]");
  // open degenerate parts vanish
  EXPECT_EQ(IntervalSet::parse("(2,2]").count(), 0u);
}

TEST(Intervals, NormalizedMembershipMatchesRawParts) {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Interval> raw;
    std::size_t k = 1 + rng() % 4;
    for (std::size_t i = 0; i < k; ++i) {
      long a = rng() % 13, b = rng() % 13;
      if (a > b) std::swap(a, b);
      raw.push_back({ratio(a, 2), static_cast<bool>(rng() % 2), ratio(b, 2), static_cast<bool>(rng() % 2)});
    }
    IntervalSet s(raw);
    for (long x = -1; x <= 14; ++x) {
      Rational q(x, 4);
      bool expect = false;
      for (const auto& p : raw) expect = expect || p.contains(q);
      EXPECT_EQ(s.contains(q), expect);
      EXPECT_EQ(oracle::in_intervals(s, q), expect);
    }
    // pairwise disjoint and sorted
    for (std::size_t i = 1; i < s.parts().size(); ++i) EXPECT_LE(s.parts()[i - 1].hi, s.parts()[i].lo);
  }
}

TEST(Intervals, JsonRoundTrip) {
  auto s = IntervalSet::parse("[0,1/3) U (2,7/2]");
  EXPECT_EQ(intervals_from_json(to_json(s)).to_string(), s.to_string());
  EXPECT_EQ(intervals_from_json(nlohmann::json("[1,2]")).to_string(), "[1,2]");
}

TEST(Intervals, SubsetAndScale) {
  auto a = IntervalSet::parse("[2,3]");
  auto b = IntervalSet::parse("[1,4)");
  EXPECT_TRUE(a.subset_of(b));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_EQ(a.scaled(Rational(1, 2)).to_string(), "[1,3/2]");
}

TEST(Glp, Examples) {
  std::vector<Rational> one{5};
  EXPECT_EQ(glp_thresholds_to_intervals(one).to_string(), "[0,5]");
  std::vector<Rational> two{3, 7};
  EXPECT_EQ(glp_thresholds_to_intervals(two).to_string(), "(3,7]");
  std::vector<Rational> three{1, 4, 9};
  EXPECT_EQ(glp_thresholds_to_intervals(three).to_string(), "[0,1] U (4,9]");
  std::vector<Rational> bad{3, 3};
  EXPECT_THROW(glp_thresholds_to_intervals(bad), std::invalid_argument);
}

TEST(Glp, ParityAndCount) {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 50; ++rep) {
    std::set<long> pick;
    std::size_t q = 1 + rng() % 7;
    while (pick.size() < q) pick.insert(rng() % 40);
    std::vector<Rational> th;
    for (auto v : pick) th.push_back(ratio(v, 2));
    auto s = glp_thresholds_to_intervals(th);
    EXPECT_EQ(s.count(), (q + 1) / 2);
    for (long x = 0; x <= 90; ++x) EXPECT_EQ(s.contains(ratio(x, 4)), oracle::glp_accepts(th, ratio(x, 4)));
  }
}
