#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
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

struct TreeEdge {
  std::size_t u;
  std::size_t v;
  Rational weight;
};

class TreeBuilder;

/// Edge-weighted tree with nonnegative rational weights.
///
/// Every node has a unique name. Leaves (degree <= 1) are named by their leaf
/// label; internal nodes carry free-form names, auto-generated ones start
/// with '_'. One node is the designated root: it fixes the Newick rendering
/// and is the attachment point for bridge_join.
class WeightedTree {
 public:
  struct Incidence {
    std::size_t node;
    std::size_t edge;
  };

  WeightedTree() = default;

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t root() const { return root_; }

  const std::string& name(std::size_t node) const { return names_.at(node); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const std::vector<Incidence>& incident(std::size_t node) const { return adj_.at(node); }
  std::size_t degree(std::size_t node) const { return adj_.at(node).size(); }
  bool is_leaf(std::size_t node) const { return degree(node) <= 1; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Leaf node ids in node order.
  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < node_count(); ++i)
      if (is_leaf(i)) out.push_back(i);
    return out;
  }

  std::vector<std::string> leaf_labels() const {
    std::vector<std::string> out;
    for (auto i : leaves()) out.push_back(names_[i]);
    return out;
  }

  /// Path-length distance from `source` to every node.
  std::vector<Rational> distances_from(std::size_t source) const {
    std::vector<Rational> dist(node_count());
    std::vector<bool> seen(node_count(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (const auto& [v, e] : adj_[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        dist[v] = dist[u] + edges_[e].weight;
        stack.push_back(v);
      }
    }
    return dist;
  }

  /// Nodes on the `side` end of `edge` once that edge is cut.
  std::vector<bool> side_of_edge(std::size_t edge, std::size_t side) const {
    std::vector<bool> in(node_count(), false);
    const auto& te = edges_.at(edge);
    std::size_t start = side == te.u ? te.u : te.v;
    std::size_t blocked = start == te.u ? te.v : te.u;
    std::vector<std::size_t> stack{start};
    in[start] = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (const auto& [v, e] : adj_[u]) {
        if (in[v] || v == blocked) continue;
        in[v] = true;
        stack.push_back(v);
      }
    }
    return in;
  }

 private:
  friend class TreeBuilder;

  std::vector<std::string> names_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t root_ = 0;
};

/// Incremental construction of a WeightedTree; build() validates.
class TreeBuilder {
 public:
  /// Empty name means "auto-generate an internal name".
  std::size_t add_node(std::string name = {}) {
    names_.push_back(std::move(name));
    return names_.size() - 1;
  }

  void add_edge(std::size_t u, std::size_t v, Rational weight) {
    if (u >= names_.size() || v >= names_.size()) throw std::out_of_range("tree edge endpoint out of range");
    if (u == v) throw std::invalid_argument("tree edge is a self-loop");
    weight.canonicalize();
    if (weight < 0) throw std::invalid_argument("tree edge weight must be nonnegative");
    edges_.push_back({u, v, std::move(weight)});
  }

  void set_root(std::size_t node) { root_ = node; }
  std::size_t node_count() const { return names_.size(); }

  WeightedTree build() const {
    const std::size_t n = names_.size();
    if (n == 0) throw std::invalid_argument("tree must have at least one node");
    if (edges_.size() + 1 != n) throw std::invalid_argument("tree must have exactly node_count - 1 edges");
    if (root_ >= n) throw std::invalid_argument("tree root out of range");

    WeightedTree t;
    t.names_ = names_;
    t.edges_ = edges_;
    t.adj_.assign(n, {});
    t.root_ = root_;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      t.adj_[edges_[e].u].push_back({edges_[e].v, e});
      t.adj_[edges_[e].v].push_back({edges_[e].u, e});
    }

    // connectivity (with n-1 edges this also rules out cycles)
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (const auto& inc : t.adj_[u])
        if (!seen[inc.node]) {
          seen[inc.node] = true;
          ++reached;
          stack.push_back(inc.node);
        }
    }
    if (reached != n) throw std::invalid_argument("tree is not connected");

    std::set<std::string> taken;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.names_[i].empty()) continue;
      if (!taken.insert(t.names_[i]).second) throw std::invalid_argument("duplicate tree node name: " + t.names_[i]);
    }
    std::size_t counter = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.names_[i].empty()) continue;
      if (t.is_leaf(i)) throw std::invalid_argument("every leaf needs a label");
      std::string candidate;
      do candidate = "_" + std::to_string(counter++);
      while (taken.count(candidate));
      taken.insert(candidate);
      t.names_[i] = candidate;
    }
    for (std::size_t i = 0; i < n; ++i) t.index_.emplace(t.names_[i], i);
    return t;
  }

 private:
  std::vector<std::string> names_;
  std::vector<TreeEdge> edges_;
  std::size_t root_ = 0;
};

// ---------------------------------------------------------------------------
// Leaf metric

/// Exact leaf-to-leaf distance matrix.
class LeafMetric {
 public:
  LeafMetric(std::vector<std::string> labels, std::vector<Rational> dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& at(std::size_t i, std::size_t j) const { return dist_[i * labels_.size() + j]; }
  const Rational& at(std::string_view u, std::string_view v) const {
    return at(index_.at(std::string(u)), index_.at(std::string(v)));
  }
  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// For every quadruple, the two largest of the three pair sums coincide.
  bool satisfies_four_point() const {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d) {
            Rational s[3] = {at(a, b) + at(c, d), at(a, c) + at(b, d), at(a, d) + at(b, c)};
            std::sort(s, s + 3);
            if (s[1] != s[2]) return false;
          }
    return true;
  }

  friend bool operator==(const LeafMetric& x, const LeafMetric& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto yi = y.index_of(x.labels_[i]);
      if (!yi) return false;
      for (std::size_t j = 0; j < x.size(); ++j) {
        auto yj = y.index_of(x.labels_[j]);
        if (!yj || x.at(i, j) != y.at(*yi, *yj)) return false;
      }
    }
    return true;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> dist_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline LeafMetric leaf_distances(const WeightedTree& t) {
  auto leaves = t.leaves();
  if (leaves.size() < 2) throw std::invalid_argument("leaf_distances needs at least two leaves");
  const std::size_t m = leaves.size();
  std::vector<Rational> dist(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    auto from = t.distances_from(leaves[i]);
    for (std::size_t j = 0; j < m; ++j) dist[i * m + j] = from[leaves[j]];
  }
  return LeafMetric(t.leaf_labels(), std::move(dist));
}

// ---------------------------------------------------------------------------
// Structural transformations

/// Suppresses every degree-2 node, replacing each suppressed chain by one edge
/// carrying the summed weight. Leaf metric is unchanged.
inline WeightedTree reduce(const WeightedTree& t) {
  const std::size_t n = t.node_count();
  std::vector<long> new_id(n, -1);
  TreeBuilder b;
  for (std::size_t i = 0; i < n; ++i)
    if (t.degree(i) != 2) new_id[i] = static_cast<long>(b.add_node(t.name(i)));

  for (std::size_t i = 0; i < n; ++i) {
    if (new_id[i] < 0) continue;
    for (const auto& start : t.incident(i)) {
      Rational w = t.edges()[start.edge].weight;
      std::size_t prev = i, cur = start.node;
      while (new_id[cur] < 0) {
        const auto& inc = t.incident(cur);
        const auto& next = inc[0].node == prev ? inc[1] : inc[0];
        w += t.edges()[next.edge].weight;
        prev = cur;
        cur = next.node;
      }
      if (i < cur) b.add_edge(static_cast<std::size_t>(new_id[i]), static_cast<std::size_t>(new_id[cur]), w);
    }
  }

  std::size_t root = t.root();
  if (new_id[root] < 0) {
    // walk towards the nearest surviving node (degree-2 chain)
    std::size_t prev = root, cur = t.incident(root)[0].node;
    while (new_id[cur] < 0) {
      const auto& inc = t.incident(cur);
      std::size_t next = inc[0].node == prev ? inc[1].node : inc[0].node;
      prev = cur;
      cur = next;
    }
    root = cur;
  }
  b.set_root(static_cast<std::size_t>(new_id[root]));
  return b.build();
}

inline bool is_reduced(const WeightedTree& t) {
  for (std::size_t i = 0; i < t.node_count(); ++i)
    if (t.degree(i) == 2) return false;
  return true;
}

/// Renames every node as prefix + name (root and weights unchanged).
inline WeightedTree prefix_names(const WeightedTree& t, std::string_view prefix) {
  TreeBuilder b;
  for (std::size_t i = 0; i < t.node_count(); ++i) b.add_node(std::string(prefix) + t.name(i));
  for (const auto& e : t.edges()) b.add_edge(e.u, e.v, e.weight);
  b.set_root(t.root());
  return b.build();
}

/// Renames leaves through `rename`; internal nodes keep their names.
template <class F>
WeightedTree rename_leaves(const WeightedTree& t, F&& rename) {
  TreeBuilder b;
  for (std::size_t i = 0; i < t.node_count(); ++i) b.add_node(t.is_leaf(i) ? rename(t.name(i)) : t.name(i));
  for (const auto& e : t.edges()) b.add_edge(e.u, e.v, e.weight);
  b.set_root(t.root());
  return b.build();
}

namespace detail {

/// Copies `t` into `b`; returns the builder id of the attachment point for
/// the root. A leaf root's pendant edge is subdivided by a node at distance
/// zero from it, so the leaf keeps degree one after attachment.
inline std::size_t copy_with_attachment(TreeBuilder& b, const WeightedTree& t, const std::set<std::string>& reserved,
                                        std::set<std::string>& used) {
  const std::size_t offset = b.node_count();
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    std::string name = t.name(i);
    if (!t.is_leaf(i) && (reserved.count(name) || used.count(name))) name.clear();
    if (!name.empty()) used.insert(name);
    b.add_node(std::move(name));
  }
  const std::size_t root = offset + t.root();
  if (t.edge_count() == 0 || !t.is_leaf(t.root())) {
    for (const auto& e : t.edges()) b.add_edge(offset + e.u, offset + e.v, e.weight);
    return root;
  }
  const std::size_t hook = b.add_node();
  for (const auto& e : t.edges()) {
    if (e.u == t.root()) b.add_edge(hook, offset + e.v, e.weight);
    else if (e.v == t.root()) b.add_edge(offset + e.u, hook, e.weight);
    else b.add_edge(offset + e.u, offset + e.v, e.weight);
  }
  b.add_edge(root, hook, Rational(0));
  return hook;
}

}  // namespace detail

/// Joins two trees by an edge of weight `w` between their attachment points.
///
/// The attachment point of each tree is its root; when the root is a leaf the
/// edge hangs off a new zero-weight subdivision node next to it. Cross
/// distances are therefore d(root1, a) + w + d(root2, b).
inline WeightedTree bridge_join(const WeightedTree& t1, const WeightedTree& t2, const Rational& w) {
  if (w < 0) throw std::invalid_argument("bridge weight must be nonnegative");
  std::set<std::string> leaves1;
  for (auto i : t1.leaves()) leaves1.insert(t1.name(i));
  for (auto i : t2.leaves())
    if (leaves1.count(t2.name(i))) throw std::invalid_argument("bridge_join: leaf label collision on " + t2.name(i));
  std::set<std::string> reserved;
  for (auto i : t2.leaves()) reserved.insert(t2.name(i));

  TreeBuilder b;
  std::set<std::string> used;
  std::size_t a1 = detail::copy_with_attachment(b, t1, reserved, used);
  std::size_t a2 = detail::copy_with_attachment(b, t2, {}, used);
  b.add_edge(a1, a2, w);
  b.set_root(a1);
  return b.build();
}

// ---------------------------------------------------------------------------
// Weighted Newick: "((a:1,c:2):10,(b:1/2,d:1):10);"

namespace detail {

inline bool newick_needs_quotes(const std::string& s) {
  for (char c : s)
    if (std::string_view("()[]':;, \t\n").find(c) != std::string_view::npos) return true;
  return false;
}

inline std::string newick_label(const std::string& s) {
  if (!newick_needs_quotes(s)) return s;
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "''";
    else out += c;
  }
  return out + "'";
}

inline void write_newick(const WeightedTree& t, std::size_t node, std::size_t parent, std::string& out) {
  std::vector<WeightedTree::Incidence> children;
  for (const auto& inc : t.incident(node))
    if (inc.node != parent) children.push_back(inc);
  if (!children.empty()) {
    out += '(';
    for (std::size_t k = 0; k < children.size(); ++k) {
      if (k) out += ',';
      write_newick(t, children[k].node, node, out);
      out += ':' + format_rational(t.edges()[children[k].edge].weight);
    }
    out += ')';
  }
  const std::string& name = t.name(node);
  if (t.is_leaf(node) || name.empty() || name[0] != '_') out += newick_label(name);
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : s_(text) {}

  WeightedTree parse() {
    skip_ws();
    std::size_t root = subtree();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ':') {  // a branch length on the root is ignored
      ++pos_;
      weight();
      skip_ws();
    }
    if (pos_ < s_.size() && s_[pos_] == ';') ++pos_;
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    b_.set_root(root);
    return b_.build();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("newick: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::size_t subtree() {
    skip_ws();
    std::vector<std::pair<std::size_t, Rational>> children;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      for (;;) {
        std::size_t child = subtree();
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ':') fail("missing branch length");
        ++pos_;
        children.emplace_back(child, weight());
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    std::string name = label();
    if (children.empty() && name.empty()) fail("unlabeled leaf");
    std::size_t node = b_.add_node(std::move(name));
    for (auto& [child, w] : children) b_.add_edge(node, child, std::move(w));
    return node;
  }

  std::string label() {
    skip_ws();
    std::string out;
    if (pos_ < s_.size() && s_[pos_] == '\'') {
      ++pos_;
      for (;;) {
        if (pos_ >= s_.size()) fail("unterminated quoted label");
        if (s_[pos_] == '\'') {
          if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '\'') {
            out += '\'';
            pos_ += 2;
            continue;
          }
          ++pos_;
          break;
        }
        out += s_[pos_++];
      }
      return out;
    }
    while (pos_ < s_.size() && std::string_view("()[]':;, \t\n\r").find(s_[pos_]) == std::string_view::npos)
      out += s_[pos_++];
    return out;
  }

  Rational weight() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                s_[pos_] == '.' || s_[pos_] == '-' || s_[pos_] == '+'))
      ++pos_;
    if (start == pos_) fail("missing weight");
    return parse_rational(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  TreeBuilder b_;
};

}  // namespace detail

inline std::string to_newick(const WeightedTree& t) {
  std::string out;
  detail::write_newick(t, t.root(), t.node_count(), out);
  return out + ";";
}

inline WeightedTree from_newick(std::string_view text) {
  try {
    return detail::NewickParser(text).parse();
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("newick: ") + ex.what());
  }
}

// ---------------------------------------------------------------------------
// JSON: {"root":"r","vertices":[...],"edges":[["u","v","w"],...]}

inline nlohmann::json to_json(const WeightedTree& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : t.edges()) edges.push_back({t.name(e.u), t.name(e.v), format_rational(e.weight)});
  return {{"root", t.name(t.root())}, {"vertices", t.names()}, {"edges", std::move(edges)}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw FormatError("rational must be a \"p/q\" string or an integer");
}

inline WeightedTree tree_from_json(const nlohmann::json& j) {
  try {
    if (j.is_string()) return from_newick(j.get<std::string>());
    if (j.contains("newick")) return from_newick(j.at("newick").get<std::string>());
    TreeBuilder b;
    std::unordered_map<std::string, std::size_t> ids;
    for (const auto& v : j.at("vertices")) {
      auto name = v.get<std::string>();
      if (name.empty()) throw FormatError("tree JSON: empty node name");
      if (!ids.emplace(name, b.add_node(name)).second) throw FormatError("tree JSON: duplicate node " + name);
    }
    auto lookup = [&](const std::string& name) {
      auto it = ids.find(name);
      if (it == ids.end()) throw FormatError("tree JSON: unknown node " + name);
      return it->second;
    };
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw FormatError("tree JSON: edge must be [u, v, weight]");
      b.add_edge(lookup(e[0].get<std::string>()), lookup(e[1].get<std::string>()), rational_from_json(e[2]));
    }
    if (j.contains("root")) b.set_root(lookup(j.at("root").get<std::string>()));
    return b.build();
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("tree JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("tree JSON: ") + ex.what());
  }
}

}  // namespace pcglab
