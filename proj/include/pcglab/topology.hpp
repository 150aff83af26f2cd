#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcglab {

/// Unrooted binary leaf-labeled tree shape. Nodes 0..leaves-1 are the
/// leaves (in label order), internal nodes follow.
struct Topology {
  std::size_t leaves = 0;
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Bitmask of the edges on the path between leaves a and b.
  std::vector<std::uint64_t> leaf_paths() const {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      adj[edges[e].first].emplace_back(edges[e].second, e);
      adj[edges[e].second].emplace_back(edges[e].first, e);
    }
    std::vector<std::uint64_t> out(leaves * leaves, 0);
    for (std::size_t a = 0; a < leaves; ++a) {
      std::vector<std::uint64_t> mask(nodes, 0);
      std::vector<bool> seen(nodes, false);
      std::vector<std::size_t> stack{a};
      seen[a] = true;
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto [v, e] : adj[u]) {
          if (seen[v]) continue;
          seen[v] = true;
          mask[v] = mask[u] | (std::uint64_t{1} << e);
          stack.push_back(v);
        }
      }
      for (std::size_t b = 0; b < leaves; ++b) out[a * leaves + b] = mask[b];
    }
    return out;
  }
};

/// Number of unrooted binary leaf-labeled topologies: (2n-5)!! for n >= 3.
inline std::uint64_t binary_topology_count(std::size_t n) {
  if (n <= 3) return 1;
  std::uint64_t c = 1;
  for (std::size_t k = 3; k <= 2 * n - 5; k += 2) c *= k;
  return c;
}

namespace detail {

inline void extend_topologies(Topology& cur, std::size_t next_leaf, std::size_t n, std::vector<Topology>& out) {
  if (next_leaf == n) {
    out.push_back(cur);
    return;
  }
  const std::size_t edge_count = cur.edges.size();
  for (std::size_t e = 0; e < edge_count; ++e) {
    auto [u, v] = cur.edges[e];
    std::size_t mid = cur.nodes++;
    cur.edges[e] = {u, mid};
    cur.edges.emplace_back(mid, v);
    cur.edges.emplace_back(mid, next_leaf);
    extend_topologies(cur, next_leaf + 1, n, out);
    cur.edges.pop_back();
    cur.edges.pop_back();
    cur.edges[e] = {u, v};
    --cur.nodes;
  }
}

}  // namespace detail

/// All binary topologies on n leaves by stepwise leaf insertion, in a fixed
/// deterministic order. n = 1 gives a single node, n = 2 a single edge.
inline std::vector<Topology> binary_topologies(std::size_t n) {
  if (n < 1) throw std::invalid_argument("need at least one leaf");
  if (2 * n > 64 + 3) throw std::invalid_argument("too many leaves for 64-bit edge masks");
  std::vector<Topology> out;
  if (n == 1) return {Topology{1, 1, {}}};
  if (n == 2) return {Topology{2, 2, {{0, 1}}}};
  Topology base{n, n + 1, {{0, n}, {1, n}, {2, n}}};
  detail::extend_topologies(base, 3, n, out);
  return out;
}

}  // namespace pcglab
