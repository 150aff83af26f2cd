#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pcglab/constructions.hpp"
#include "pcglab/tree.hpp"

using namespace pcglab;

namespace {

WeightedTree single_edge(const std::string& a, const std::string& b, Rational w) {
  TreeBuilder tb;
  auto u = tb.add_node(a);
  auto v = tb.add_node(b);
  tb.add_edge(u, v, w);
  return tb.build();
}

/// Every edge of `t` split by `extra` new degree-2 nodes at random positions.
WeightedTree subdivide(const WeightedTree& t, std::size_t extra, std::mt19937_64& rng) {
  std::vector<TreeEdge> es = t.edges();
  std::size_t nodes = t.node_count();
  for (std::size_t k = 0; k < extra; ++k) {
    std::size_t i = rng() % es.size();
    TreeEdge e = es[i];
    Rational part = e.weight * ratio(static_cast<long>(rng() % 3 + 1), 4);
    std::size_t mid = nodes++;
    es[i] = {e.u, mid, part};
    es.push_back({mid, e.v, e.weight - part});
  }
  TreeBuilder b;
  for (std::size_t i = 0; i < t.node_count(); ++i) b.add_node(t.name(i));
  while (b.node_count() < nodes) b.add_node();
  for (const auto& e : es) b.add_edge(e.u, e.v, e.weight);
  return b.build();
}

}  // namespace

TEST(Tree, FigureOneDistances) {
  auto m = leaf_distances(figure1_tree());
  EXPECT_EQ(m.at("a", "c"), 3);
  EXPECT_EQ(m.at("a", "b"), 23);
  EXPECT_EQ(m.at("a", "f"), 25);
  EXPECT_EQ(m.at("e", "g"), 7);
}

TEST(Tree, FigureTwoDistances) {
  auto t = figure2_tree_h1();
  auto m = leaf_distances(t);
  EXPECT_EQ(m.at("g", "d"), 12);
  EXPECT_EQ(m.at("a", "e"), 18);
  EXPECT_EQ(m.at("c", "b"), 10);
  for (const auto& u : t.leaf_labels())
    for (const auto& v : t.leaf_labels()) EXPECT_EQ(m.at(u, v), oracle::dist(t, u, v)) << u << v;
}

TEST(Tree, SingleEdgeDistance) {
  auto t = single_edge("a", "b", Rational(7, 3));
  EXPECT_EQ(leaf_distances(t).at("a", "b"), Rational(7, 3));
}

TEST(Tree, LeafDistancesNeedTwoLeaves) {
  TreeBuilder b;
  b.add_node("a");
  EXPECT_THROW(leaf_distances(b.build()), std::invalid_argument);
}

TEST(Tree, BuilderValidation) {
  {
    TreeBuilder b;
    auto x = b.add_node("a"), y = b.add_node("b");
    EXPECT_THROW(b.add_edge(x, y, Rational(-1)), std::invalid_argument);
  }
  {
    TreeBuilder b;  // cycle
    auto x = b.add_node(), y = b.add_node(), z = b.add_node();
    b.add_edge(x, y, 1);
    b.add_edge(y, z, 1);
    b.add_edge(z, x, 1);
    EXPECT_THROW(b.build(), std::invalid_argument);
  }
  {
    TreeBuilder b;  // unlabeled leaf
    auto x = b.add_node("a"), y = b.add_node();
    b.add_edge(x, y, 1);
    EXPECT_THROW(b.build(), std::invalid_argument);
  }
  {
    TreeBuilder b;  // duplicate names
    auto x = b.add_node("a"), y = b.add_node("a");
    b.add_edge(x, y, 1);
    EXPECT_THROW(b.build(), std::invalid_argument);
  }
}

TEST(Tree, ReducePath) {
  TreeBuilder b;
  auto a = b.add_node("a"), x = b.add_node("x"), c = b.add_node("b");
  b.add_edge(a, x, 1);
  b.add_edge(x, c, 2);
  auto r = reduce(b.build());
  ASSERT_EQ(r.edge_count(), 1u);
  EXPECT_EQ(r.edges()[0].weight, 3);
  EXPECT_TRUE(is_reduced(r));
}

TEST(Tree, ReduceFigureOnePreservesMetric) {
  // The hub of this tree has degree two, so reduce merges its arms.
  auto t = figure1_tree();
  auto r = reduce(t);
  EXPECT_TRUE(is_reduced(r));
  EXPECT_EQ(r.node_count(), t.node_count() - 1);
  EXPECT_EQ(leaf_distances(r), leaf_distances(t));
}

TEST(Tree, ReduceIsIdentityOnReducedTrees) {
  auto t = figure2_tree_h2();
  ASSERT_TRUE(is_reduced(t));
  auto r = reduce(t);
  EXPECT_EQ(r.node_count(), t.node_count());
  EXPECT_EQ(to_newick(r), to_newick(t));
}

TEST(Tree, ReducePreservesMetricOnRandomTrees) {
  std::mt19937_64 rng(20);
  for (int rep = 0; rep < 5; ++rep) {
    auto t = oracle::random_reduced_tree(rng, 20);
    auto s = subdivide(t, 10, rng);
    ASSERT_FALSE(is_reduced(s));
    auto r = reduce(s);
    EXPECT_TRUE(is_reduced(r));
    EXPECT_EQ(leaf_distances(r), leaf_distances(t));
    EXPECT_EQ(leaf_distances(s), leaf_distances(t));
  }
}

TEST(Tree, FourPointCondition) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    auto t = oracle::random_reduced_tree(rng, 2 + rng() % 9);
    EXPECT_TRUE(leaf_distances(t).satisfies_four_point());
  }
}

TEST(Tree, BridgeJoinSingleEdges) {
  auto t1 = single_edge("a", "b", 1);
  auto t2 = single_edge("c", "d", 1);
  auto j = bridge_join(t1, t2, 100);
  auto m = leaf_distances(j);
  EXPECT_GE(m.at("a", "c"), 100);
  EXPECT_LE(m.at("a", "c"), 102);
  // roots are the first nodes a and c, reached via zero-weight hooks
  EXPECT_EQ(m.at("a", "c"), 100);
  EXPECT_EQ(m.at("b", "d"), 102);
  EXPECT_EQ(m.at("a", "b"), 1);
}

TEST(Tree, BridgeJoinZeroWeightPreservesDistances) {
  auto t1 = figure2_tree_h1();
  auto t2 = rename_leaves(figure2_tree_h2(), [](const std::string& s) { return s + "2"; });
  auto j = bridge_join(t1, t2, 0);
  auto m = leaf_distances(j);
  auto m1 = leaf_distances(t1);
  auto m2 = leaf_distances(t2);
  for (const auto& u : t1.leaf_labels())
    for (const auto& v : t1.leaf_labels()) EXPECT_EQ(m.at(u, v), m1.at(u, v));
  for (const auto& u : t2.leaf_labels())
    for (const auto& v : t2.leaf_labels()) EXPECT_EQ(m.at(u, v), m2.at(u, v));
}

TEST(Tree, BridgeJoinFigureTwoTrees) {
  auto t1 = figure2_tree_h1();
  auto t2 = rename_leaves(figure2_tree_h2(), [](const std::string& s) { return s + "'"; });
  auto j = bridge_join(t1, t2, 1000);
  std::size_t cross = 0;
  for (const auto& u : t1.leaf_labels())
    for (const auto& v : t2.leaf_labels()) {
      EXPECT_GT(oracle::dist(j, u, v), 1000) << u << v;
      ++cross;
    }
  EXPECT_EQ(cross, 64u);
  EXPECT_THROW(bridge_join(t1, figure2_tree_h2(), 1), std::invalid_argument);
}

TEST(Tree, NewickRoundTrip) {
  for (const auto& t : {figure1_tree(), figure2_tree_h1(), figure2_tree_h2()}) {
    auto back = from_newick(to_newick(t));
    EXPECT_EQ(leaf_distances(back), leaf_distances(t));
  }
  auto t = from_newick("(a:1,c:2,e:3,g:4)L:10;");
  EXPECT_EQ(leaf_distances(t).at("a", "g"), 5);
  auto q = from_newick("('x y':1/2,b:3/4);");
  EXPECT_EQ(leaf_distances(q).at("x y", "b"), Rational(5, 4));
  EXPECT_THROW(from_newick("(a,b);"), FormatError);
  EXPECT_THROW(from_newick("(a:1,b:2"), FormatError);
}

TEST(Tree, JsonRoundTrip) {
  auto t = figure2_tree_h2();
  auto back = tree_from_json(to_json(t));
  EXPECT_EQ(leaf_distances(back), leaf_distances(t));
  EXPECT_EQ(back.name(back.root()), t.name(t.root()));
  auto nw = tree_from_json(nlohmann::json("(a:1,b:1);"));
  EXPECT_EQ(leaf_distances(nw).at("a", "b"), 2);
}
