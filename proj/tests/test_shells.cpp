#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pcglab/shells.hpp"

using namespace pcglab;

namespace {

WeightedTree unit_star(std::size_t leaves) {
  TreeBuilder b;
  auto c = b.add_node();
  for (std::size_t i = 0; i < leaves; ++i) b.add_edge(c, b.add_node(std::string(1, static_cast<char>('a' + i))), 1);
  return b.build();
}

}  // namespace

TEST(Shells, SingleEdge) {
  TreeBuilder b;
  b.add_edge(b.add_node("a"), b.add_node("b"), 2);
  auto f = enumerate_shells(b.build(), IntervalSet::closed(0, 1));
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.shells, oracle::shells(b.build(), IntervalSet::closed(0, 1)));
  ASSERT_EQ(f.edges.size(), 1u);
  EXPECT_LE(f.edges[0].shells, f.edges[0].face_bound());
}

TEST(Shells, UnitStarReachesEverySubset) {
  auto f = enumerate_shells(unit_star(3), IntervalSet::closed(1, 1));
  EXPECT_EQ(f.size(), 8u);
  EXPECT_TRUE(f.contains({}));
  EXPECT_TRUE(f.contains({"a", "c"}));
}

TEST(Shells, EmptyIntervalsGiveOnlyEmptySet) {
  auto f = enumerate_shells(unit_star(4), IntervalSet{});
  EXPECT_EQ(f.shells, (std::set<std::string>{"0000"}));
}

TEST(Shells, SingleLeafTree) {
  TreeBuilder b;
  b.add_node("a");
  auto f = enumerate_shells(b.build(), IntervalSet::closed(1, 2));
  EXPECT_EQ(f.shells, (std::set<std::string>{"0", "1"}));
}

TEST(Shells, NonReducedInputIsReduced) {
  TreeBuilder b;
  auto a = b.add_node("a"), m = b.add_node(), c = b.add_node("c");
  b.add_edge(a, m, 1);
  b.add_edge(m, c, 2);
  auto f = enumerate_shells(b.build(), IntervalSet::closed(1, 2));
  EXPECT_EQ(f.edges.size(), 1u);
  EXPECT_EQ(f.edges[0].weight, 3);
}

TEST(Shells, AgreesWithGridOracle) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 60; ++rep) {
    auto t = oracle::random_reduced_tree(rng, 2 + rng() % 6);
    auto iv = oracle::random_intervals(rng, 3, 10);
    auto f = enumerate_shells(t, iv);
    ASSERT_EQ(f.ground, t.leaf_labels());
    EXPECT_EQ(f.shells, oracle::shells(t, iv)) << to_newick(t) << " " << iv.to_string();
    for (const auto& e : f.edges) EXPECT_LE(e.shells, e.face_bound()) << to_newick(t) << " " << iv.to_string();
  }
}

TEST(Shells, DegenerateIntervals) {
  std::mt19937_64 rng(9);
  for (const char* s : {"[2,2]", "[1,2) U (2,3]", "(0,1) U [4,4] U (5,6]", "[0,0] U [3,3]"}) {
    auto iv = IntervalSet::parse(s);
    for (int rep = 0; rep < 10; ++rep) {
      auto t = oracle::random_reduced_tree(rng, 3 + rng() % 4);
      auto f = enumerate_shells(t, iv);
      EXPECT_EQ(f.shells, oracle::shells(t, iv)) << to_newick(t) << " " << s;
      for (const auto& e : f.edges) EXPECT_LE(e.shells, e.face_bound()) << to_newick(t) << " " << s;
    }
  }
}

TEST(Shells, FullSetPresentForBoundedInterval) {
  // a long enough interval swallows every distance at once
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    auto t = oracle::random_reduced_tree(rng, 5);
    auto f = enumerate_shells(t, IntervalSet::closed(0, 100));
    EXPECT_TRUE(f.shells.count(std::string(5, '1')));
    EXPECT_TRUE(f.shells.count(std::string(5, '0')));
  }
}

TEST(Shells, JsonShape) {
  auto j = to_json(enumerate_shells(unit_star(3), IntervalSet::closed(1, 1)));
  EXPECT_EQ(j["count"], 8);
  EXPECT_EQ(j["ground"].size(), 3u);
  EXPECT_EQ(j["shells"].size(), 8u);
}

TEST(BoundReport, Examples) {
  auto ok = shell_bound_report(5, 10, {40});
  EXPECT_TRUE(ok.feasible);
  EXPECT_EQ(ok.min_k, 1u);
  auto bad = shell_bound_report(3, 5, {2, 2});
  EXPECT_FALSE(bad.feasible);
  EXPECT_EQ(bad.product, 4);
  EXPECT_EQ(bad.min_k, 3u);
  auto one = shell_bound_report(3, 1, {1});
  EXPECT_TRUE(one.feasible);
  EXPECT_EQ(one.min_k, 0u);
  EXPECT_FALSE(shell_bound_report(3, 2, {1, 1}).min_k);
  EXPECT_THROW(shell_bound_report(0, 1, {1}), std::invalid_argument);
  EXPECT_EQ(to_json(bad)["product"], "4");
}
