#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pcglab/constructions.hpp"
#include "pcglab/recognizer.hpp"

using namespace pcglab;

namespace {

void expect_witness(const Graph& g, const RecognitionResult& r) {
  ASSERT_EQ(r.status, RecognitionStatus::Witness);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(oracle::edge_set(g), oracle::pcg_edges(*r.witness));
  EXPECT_EQ(r.witness->intervals().count(), 1u);
}

}  // namespace

TEST(Recognize, FourCycleIsPcg) {
  auto g = cycle_graph(4);
  expect_witness(g, recognize_pcg(g));
}

TEST(Recognize, AllGraphsOnThreeVertices) {
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    Graph g(numbered_labels("v", 3));
    if (mask & 1) g.add_edge(0, 1);
    if (mask & 2) g.add_edge(0, 2);
    if (mask & 4) g.add_edge(1, 2);
    expect_witness(g, recognize_pcg(g));
  }
}

TEST(Recognize, TinyGraphs) {
  expect_witness(complete_graph(1), recognize_pcg(complete_graph(1)));
  expect_witness(complete_graph(2), recognize_pcg(complete_graph(2)));
  expect_witness(empty_graph(2), recognize_pcg(empty_graph(2)));
}

TEST(Recognize, RandomGraphsUpToSix) {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 40; ++rep) {
    auto g = oracle::random_graph(rng, 4 + rng() % 3);
    expect_witness(g, recognize_pcg(g));
  }
}

TEST(Recognize, SizeLimit) {
  EXPECT_THROW(recognize_pcg(cycle_graph(7)), std::invalid_argument);
  expect_witness(cycle_graph(7), recognize_pcg(cycle_graph(7), 7));
}

TEST(Recognize, WorkersGiveSameAnswer) {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 8; ++rep) {
    auto g = oracle::random_graph(rng, 6);
    auto a = recognize_pcg(g, 6, 1);
    auto b = recognize_pcg(g, 6, 3);
    ASSERT_EQ(a.status, b.status);
    EXPECT_EQ(a.stats.topologies_tried, b.stats.topologies_tried);
    EXPECT_EQ(to_json(*a.witness).dump(), to_json(*b.witness).dump());
  }
}

TEST(LeafPower, FourCycleRefutedOverThreeTopologies) {
  auto r = recognize_leaf_power(cycle_graph(4));
  EXPECT_EQ(r.status, RecognitionStatus::RefutedExhaustive);
  EXPECT_EQ(r.stats.topologies_tried, 3u);
  EXPECT_FALSE(r.witness);
}

TEST(LeafPower, PathsAndCliquesAreLeafPowers) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : {path_graph(n), complete_graph(n)}) {
      auto r = recognize_leaf_power(g);
      expect_witness(g, r);
      EXPECT_EQ(r.witness->intervals().parts()[0].lo, 0);
    }
  }
}

TEST(LeafPower, FiveCycleIsNotALeafPower) {
  // leaf powers are chordal
  auto r = recognize_leaf_power(cycle_graph(5));
  EXPECT_EQ(r.status, RecognitionStatus::RefutedExhaustive);
  EXPECT_EQ(r.stats.topologies_tried, 15u);
}

TEST(Certificate, FamilyFrTwo) {
  auto g = family_Fr(2);
  auto r = non_pcg_certificate(g);
  ASSERT_EQ(r.status, RecognitionStatus::CertificateNonPcg);
  auto h = complement(g);
  EXPECT_TRUE(oracle::is_hole(h, r.certificate->first));
  EXPECT_TRUE(oracle::is_hole(h, r.certificate->second));
  EXPECT_TRUE(oracle::separated(h, r.certificate->first, r.certificate->second));
  EXPECT_EQ(r.certificate->first.size(), 4u);
}

TEST(Certificate, GkFamily) {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto w = build_gk_family(k);
    auto r = non_pcg_certificate(w.graph());
    ASSERT_EQ(r.status, RecognitionStatus::CertificateNonPcg) << k;
    auto h = complement(w.graph());
    EXPECT_TRUE(oracle::is_hole(h, r.certificate->first));
    EXPECT_TRUE(oracle::is_hole(h, r.certificate->second));
    EXPECT_TRUE(oracle::separated(h, r.certificate->first, r.certificate->second));
  }
}

TEST(Certificate, InconclusiveCases) {
  EXPECT_EQ(non_pcg_certificate(cycle_graph(4)).status, RecognitionStatus::Inconclusive);
  // complement 2K_3: triangles are not holes, and K_{3,3} is a PCG
  EXPECT_EQ(non_pcg_certificate(complete_bipartite_graph(3, 3)).status, RecognitionStatus::Inconclusive);
  expect_witness(complete_bipartite_graph(3, 3), recognize_pcg(complete_bipartite_graph(3, 3)));
}

TEST(Certificate, LongerHoles) {
  // complement = C_5 + C_6, disjoint
  auto h = disjoint_union({cycle_graph(5), cycle_graph(6)}, true);
  auto r = non_pcg_certificate(complement(h));
  ASSERT_EQ(r.status, RecognitionStatus::CertificateNonPcg);
  EXPECT_EQ(r.certificate->first.size(), 5u);
  EXPECT_EQ(r.certificate->second.size(), 6u);
}

TEST(Census, SmallOrders) {
  auto r3 = census(3, CensusMode::Unlabeled);
  EXPECT_EQ(r3.graphs, 4u);
  EXPECT_EQ(r3.witnesses, 4u);
  auto r4 = census(4, CensusMode::Unlabeled);
  EXPECT_EQ(r4.graphs, 11u);
  EXPECT_EQ(r4.witnesses, 11u);
  EXPECT_EQ(r4.refutations, 0u);
  auto l4 = census(4, CensusMode::Labeled);
  EXPECT_EQ(l4.graphs, 64u);
  EXPECT_EQ(l4.labeled_pcgs, 64u);
  for (const auto& e : r4.entries) {
    ASSERT_TRUE(e.witness);
    EXPECT_TRUE(verify_representation(*e.witness, from_graph6(e.graph6)).valid);
  }
}

TEST(Census, LimitAndWarning) {
  EXPECT_THROW(census(7, CensusMode::Unlabeled), std::invalid_argument);
  EXPECT_TRUE(census(2, CensusMode::Unlabeled).warnings.empty());
}
