#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pcglab/graph.hpp"

using namespace pcglab;

TEST(Graph, ComplementOfCompleteIsEmpty) {
  auto c = complement(complete_graph(4));
  EXPECT_EQ(c.order(), 4u);
  EXPECT_EQ(c.size(), 0u);
}

TEST(Graph, ComplementOfFourCycleIsTwoK2) {
  Graph c4({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
  auto c = complement(c4);
  EXPECT_EQ(c.edges(), (std::vector<Edge>{{"1", "3"}, {"2", "4"}}));
}

TEST(Graph, ComplementIsInvolution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto g = oracle::random_graph(rng, 8);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Graph, CanonicalEdgeStorage) {
  Graph g({"b", "a"});
  g.add_edge("b", "a");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{"a", "b"}}));
  EXPECT_THROW(g.add_edge("a", "a"), std::invalid_argument);
  EXPECT_THROW(g.add_edge("a", "z"), std::invalid_argument);
  EXPECT_THROW(Graph({"x", "x"}), std::invalid_argument);
}

TEST(Graph, DisjointUnion) {
  auto two_k2 = disjoint_union({complete_graph(2), complete_graph(2)}, true);
  EXPECT_EQ(two_k2.order(), 4u);
  EXPECT_EQ(two_k2.size(), 2u);
  EXPECT_TRUE(two_k2.has_vertex("c0.v0"));
  EXPECT_TRUE(two_k2.has_vertex("c1.v1"));

  auto k22 = complete_bipartite_graph(2, 2);
  auto u = disjoint_union({k22, k22}, true);
  EXPECT_EQ(u.order(), 8u);
  EXPECT_EQ(u.size(), 8u);
  EXPECT_EQ(complement(u).size(), 20u);

  EXPECT_THROW(disjoint_union({k22, k22}, false), std::invalid_argument);
  Graph a({"x"}), b({"y"});
  EXPECT_EQ(disjoint_union({a, b}, false).order(), 2u);
}

TEST(Graph, StandardGraphs) {
  EXPECT_EQ(complete_graph(3).size(), 3u);
  auto k22 = complete_bipartite_graph(2, 2);
  EXPECT_EQ(k22.size(), 4u);
  EXPECT_TRUE(k22.has_vertex("a0") && k22.has_vertex("b1"));
  auto c5 = cycle_graph(5);
  EXPECT_EQ(c5.order(), 5u);
  EXPECT_EQ(c5.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(c5.degree(i), 2u);
  EXPECT_EQ(c5.label(0), "v0");
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
  EXPECT_EQ(empty_graph(3).size(), 0u);
  EXPECT_EQ(path_graph(4).size(), 3u);
}

TEST(Graph, DoubleComplementPrime) {
  auto k2 = double_complement_prime(empty_graph(1));
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_EQ(k2.size(), 1u);

  auto g = double_complement_prime(cycle_graph(4));
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.size(), 20u);

  // two within-copy edges plus four cross edges
  auto e2 = double_complement_prime(empty_graph(2));
  EXPECT_EQ(e2.order(), 4u);
  EXPECT_EQ(e2.size(), 6u);
}

TEST(Graph, DoubleComplementPrimeMatchesDefinition) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 1 + rng() % 7;
    auto g = oracle::random_graph(rng, n);
    auto gp = double_complement_prime(g);
    EXPECT_EQ(gp, complement(disjoint_union({g, g}, true)));
    EXPECT_EQ(gp.size(), 2 * (n * (n - 1) / 2 - g.size()) + n * n);
  }
}

TEST(Graph, Graph6RoundTrip) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(path_graph(4)), "Ch");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    auto g = oracle::random_graph(rng, 1 + rng() % 20);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
  EXPECT_THROW(from_graph6(""), FormatError);
  EXPECT_THROW(from_graph6("C"), FormatError);
}

TEST(Graph, JsonRoundTrip) {
  auto g = double_complement_prime(cycle_graph(4));
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"vertices":["a"],"edges":[["a","b"]]})")), FormatError);
}

TEST(Graph, ComponentsAndInducedSubgraph) {
  auto g = disjoint_union({cycle_graph(4), complete_graph(3), empty_graph(1)}, true);
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].size(), 4u);
  auto sub = induced_subgraph(g, comps[1]);
  EXPECT_EQ(sub.size(), 3u);
}
