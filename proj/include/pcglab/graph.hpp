#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rational.hpp"

namespace pcglab {

using Edge = std::pair<std::string, std::string>;

/// Labeled simple undirected graph.
///
/// Vertices keep the order they were given in (graph6 export follows it);
/// equality is labeled-graph equality and ignores that order.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::vector<std::string> vertices) : labels_(std::move(vertices)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw std::invalid_argument("vertex label must be non-empty");
      if (!index_.emplace(labels_[i], i).second)
        throw std::invalid_argument("duplicate vertex label: " + labels_[i]);
    }
    adj_.assign(labels_.size() * labels_.size(), 0);
  }

  Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges)
      : Graph(std::move(vertices)) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edge_count_; }

  const std::vector<std::string>& vertices() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool has_vertex(std::string_view label) const { return index_of(label).has_value(); }

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * labels_.size() + j] != 0; }
  bool adjacent(std::string_view u, std::string_view v) const {
    return adjacent(checked_index(u), checked_index(v));
  }

  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("self-loop on " + labels_.at(i));
    if (i >= order() || j >= order()) throw std::out_of_range("vertex index out of range");
    if (adjacent(i, j)) return;
    adj_[i * order() + j] = adj_[j * order() + i] = 1;
    ++edge_count_;
  }
  void add_edge(std::string_view u, std::string_view v) { add_edge(checked_index(u), checked_index(v)); }

  void remove_edge(std::size_t i, std::size_t j) {
    if (!adjacent(i, j)) return;
    adj_[i * order() + j] = adj_[j * order() + i] = 0;
    --edge_count_;
  }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < order(); ++j) d += adjacent(i, j);
    return d;
  }

  std::vector<std::size_t> neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < order(); ++j)
      if (adjacent(i, j)) out.push_back(j);
    return out;
  }

  /// Canonical edge list: each pair stored smaller label first, list sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = i + 1; j < order(); ++j)
        if (adjacent(i, j)) out.push_back(canonical_edge(labels_[i], labels_[j]));
    std::sort(out.begin(), out.end());
    return out;
  }

  static Edge canonical_edge(const std::string& u, const std::string& v) {
    return u < v ? Edge{u, v} : Edge{v, u};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<std::size_t> map(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
      auto j = b.index_of(a.labels_[i]);
      if (!j) return false;
      map[i] = *j;
    }
    for (std::size_t i = 0; i < a.order(); ++i)
      for (std::size_t j = i + 1; j < a.order(); ++j)
        if (a.adjacent(i, j) != b.adjacent(map[i], map[j])) return false;
    return true;
  }

 private:
  std::size_t checked_index(std::string_view label) const {
    auto i = index_of(label);
    if (!i) throw std::invalid_argument("unknown vertex: " + std::string(label));
    return *i;
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint8_t> adj_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Standard graphs

inline std::vector<std::string> numbered_labels(std::string_view prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

inline Graph empty_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
  return Graph(numbered_labels("v", n));
}

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(numbered_labels("v", n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(numbered_labels("v", n));
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(numbered_labels("v", n));
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// K_{a,b} with sides labeled "a0.." and "b0..".
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite graph needs a, b >= 1");
  auto labels = numbered_labels("a", a);
  auto right = numbered_labels("b", b);
  labels.insert(labels.end(), right.begin(), right.end());
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

// ---------------------------------------------------------------------------
// Operations

inline Graph complement(const Graph& g) {
  Graph out(g.vertices());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) out.add_edge(i, j);
  return out;
}

inline std::string copy_prefix(std::size_t copy) { return "c" + std::to_string(copy) + "."; }

/// Disjoint union. With relabeling, copy i's labels become "c<i>.<label>".
inline Graph disjoint_union(const std::vector<Graph>& gs, bool relabel_prefixing) {
  std::vector<std::string> labels;
  std::vector<std::size_t> offsets;
  for (std::size_t c = 0; c < gs.size(); ++c) {
    offsets.push_back(labels.size());
    for (const auto& v : gs[c].vertices())
      labels.push_back(relabel_prefixing ? copy_prefix(c) + v : v);
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw std::invalid_argument("disjoint_union: vertex labels overlap (enable relabeling)");
  Graph out(std::move(labels));
  for (std::size_t c = 0; c < gs.size(); ++c)
    for (std::size_t i = 0; i < gs[c].order(); ++i)
      for (std::size_t j = i + 1; j < gs[c].order(); ++j)
        if (gs[c].adjacent(i, j)) out.add_edge(offsets[c] + i, offsets[c] + j);
  return out;
}

/// G' = complement of two disjoint copies of g (copies prefixed "c0." and "c1.").
inline Graph double_complement_prime(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (std::size_t c = 0; c < 2; ++c)
    for (const auto& v : g.vertices()) labels.push_back(copy_prefix(c) + v);
  Graph out(std::move(labels));
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!g.adjacent(i, j)) out.add_edge(c * n + i, c * n + j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.add_edge(i, n + j);
  return out;
}

/// Connected components as lists of vertex indices, in order of smallest member.
inline std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t j = 0; j < g.order(); ++j)
        if (comp[j] < 0 && g.adjacent(members[k], j)) {
          comp[j] = static_cast<int>(out.size());
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& keep) {
  std::vector<std::string> labels;
  for (auto i : keep) labels.push_back(g.label(i));
  Graph out(std::move(labels));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (g.adjacent(keep[a], keep[b])) out.add_edge(a, b);
  return out;
}

/// Same graph with every vertex renamed through `rename`.
template <class F>
Graph relabeled(const Graph& g, F&& rename) {
  std::vector<std::string> labels;
  for (const auto& v : g.vertices()) labels.push_back(rename(v));
  Graph out(std::move(labels));
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) out.add_edge(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// graph6

constexpr std::size_t kGraph6MaxOrder = 62;

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6 export supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

/// Vertices are labeled "v0".."v(n-1)"; an optional ">>graph6<<" header is accepted.
inline Graph from_graph6(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
  if (s.empty()) throw FormatError("graph6: empty input");
  for (char c : s)
    if (c < 63 || c > 126) throw FormatError("graph6: byte out of range");
  const std::size_t n = static_cast<std::size_t>(s[0] - 63);
  if (n > kGraph6MaxOrder) throw FormatError("graph6: only orders <= 62 are supported");
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() != 1 + nbytes) throw FormatError("graph6: wrong length for order " + std::to_string(n));
  if (n == 0) throw FormatError("graph6: order 0 graphs are not supported");
  Graph g(numbered_labels("v", n));
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = s[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

// ---------------------------------------------------------------------------
// JSON: {"vertices":[...], "edges":[["u","v"],...]}

inline nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    Graph g(j.at("vertices").get<std::vector<std::string>>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("graph JSON: edge must be a pair");
      g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("graph JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("graph JSON: ") + ex.what());
  }
}

}  // namespace pcglab
