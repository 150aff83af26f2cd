#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pcglab/topology.hpp"

using namespace pcglab;

namespace {

/// Canonical form: the set of nontrivial splits, each as the side not
/// containing leaf 0, encoded as a leaf bitmask.
std::set<std::uint64_t> splits(const Topology& t) {
  std::vector<std::vector<std::size_t>> adj(t.nodes);
  for (const auto& [u, v] : t.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<std::uint64_t> out;
  for (const auto& [u, v] : t.edges) {
    // leaves reachable from v without crossing (u,v)
    std::uint64_t mask = 0;
    std::vector<std::size_t> stack{v};
    std::vector<bool> seen(t.nodes, false);
    seen[u] = seen[v] = true;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      if (x < t.leaves) mask |= std::uint64_t{1} << x;
      for (auto y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    const std::uint64_t all = (std::uint64_t{1} << t.leaves) - 1;
    if (mask & 1) mask = all & ~mask;
    if (std::popcount(mask) >= 2 && std::popcount(mask) <= static_cast<int>(t.leaves) - 2) out.insert(mask);
  }
  return out;
}

}  // namespace

TEST(Topology, CountsAreDoubleFactorials) {
  EXPECT_EQ(binary_topology_count(3), 1u);
  EXPECT_EQ(binary_topology_count(4), 3u);
  EXPECT_EQ(binary_topology_count(5), 15u);
  EXPECT_EQ(binary_topology_count(6), 105u);
  EXPECT_EQ(binary_topology_count(7), 945u);
  EXPECT_EQ(binary_topology_count(8), 10395u);
}

TEST(Topology, EnumerationIsCompleteAndDistinct) {
  for (std::size_t n = 3; n <= 7; ++n) {
    auto all = binary_topologies(n);
    ASSERT_EQ(all.size(), binary_topology_count(n));
    std::set<std::set<std::uint64_t>> seen;
    for (const auto& t : all) {
      EXPECT_EQ(t.edges.size(), 2 * n - 3);
      EXPECT_EQ(t.nodes, 2 * n - 2);
      std::vector<int> deg(t.nodes, 0);
      for (const auto& [u, v] : t.edges) ++deg[u], ++deg[v];
      for (std::size_t i = 0; i < t.nodes; ++i) EXPECT_EQ(deg[i], i < n ? 1 : 3);
      auto s = splits(t);
      EXPECT_EQ(s.size(), n - 3);
      seen.insert(s);
    }
    EXPECT_EQ(seen.size(), all.size()) << n;
  }
}

TEST(Topology, SmallCases) {
  EXPECT_EQ(binary_topologies(1).size(), 1u);
  auto two = binary_topologies(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].edges.size(), 1u);
  EXPECT_THROW(binary_topologies(0), std::invalid_argument);
}

TEST(Topology, LeafPathsOnQuartet) {
  auto t = binary_topologies(4)[0];
  auto p = t.leaf_paths();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      EXPECT_EQ(p[a * 4 + b], p[b * 4 + a]);
      if (a == b) EXPECT_EQ(p[a * 4 + b], 0u);
      else EXPECT_GE(std::popcount(p[a * 4 + b]), 2);
    }
}
