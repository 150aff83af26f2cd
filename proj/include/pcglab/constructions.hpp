#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "intervals.hpp"
#include "pcg.hpp"
#include "recognizer.hpp"
#include "tree.hpp"

namespace pcglab {

/// A graph together with a representation evaluating to it. Construction
/// runs the verification; a graph without witness (e.g. I(5,3)) is allowed.
class WitnessedGraph {
 public:
  WitnessedGraph(std::string name, Graph graph, std::optional<Representation> witness, std::string provenance)
      : name_(std::move(name)), graph_(std::move(graph)), witness_(std::move(witness)), provenance_(std::move(provenance)) {
    if (witness_ && !verify_representation(*witness_, graph_).valid)
      throw std::logic_error("witness for " + name_ + " does not reproduce its graph");
  }

  const std::string& name() const { return name_; }
  const Graph& graph() const { return graph_; }
  const std::optional<Representation>& witness() const { return witness_; }
  const std::string& provenance() const { return provenance_; }

 private:
  std::string name_;
  Graph graph_;
  std::optional<Representation> witness_;
  std::string provenance_;
};

inline nlohmann::json to_json(const WitnessedGraph& w, bool with_provenance) {
  nlohmann::json j = {{"name", w.name()}, {"graph", to_json(w.graph())}};
  if (w.graph().order() <= kGraph6MaxOrder) j["graph6"] = to_graph6(w.graph());
  if (w.witness()) j["witness"] = to_json(*w.witness());
  if (with_provenance) j["provenance"] = w.provenance();
  return j;
}

// ---------------------------------------------------------------------------
// Trivial witnesses

namespace detail {

inline Graph empty_graph_on(std::vector<std::string> labels) { return Graph(std::move(labels)); }

inline WeightedTree unit_star(const std::vector<std::string>& labels) {
  TreeBuilder b;
  if (labels.size() == 1) {
    b.add_node(labels[0]);
    return b.build();
  }
  std::size_t centre = b.add_node();
  for (const auto& l : labels) b.add_edge(centre, b.add_node(l), Rational(1));
  return b.build();
}

}  // namespace detail

/// Star with unit leaf edges and interval [2,2]: every pair is adjacent.
inline PcgRep complete_witness(const std::vector<std::string>& labels) {
  return PcgRep::identity(detail::unit_star(labels), IntervalSet::closed(Rational(2), Rational(2)));
}

/// Star with unit leaf edges and no admissible distance.
inline PcgRep empty_witness(const std::vector<std::string>& labels) {
  return PcgRep::identity(detail::unit_star(labels), IntervalSet{});
}

// ---------------------------------------------------------------------------
// Padding

namespace detail {

inline Graph union_of(const std::vector<PcgRep>& reps) {
  Graph out = eval_pcg(reps.at(0));
  for (std::size_t k = 1; k < reps.size(); ++k) {
    Graph g = eval_pcg(reps[k]);
    for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  }
  return out;
}

inline Graph intersection_of(const std::vector<PcgRep>& reps) {
  Graph out = eval_pcg(reps.at(0));
  for (std::size_t k = 1; k < reps.size(); ++k) {
    Graph g = eval_pcg(reps[k]);
    for (const auto& [u, v] : out.edges())
      if (!g.adjacent(u, v)) out.remove_edge(*out.index_of(u), *out.index_of(v));
  }
  return out;
}

}  // namespace detail

/// OR decomposition G = G_1 u ... u G_q to an (n,t)-threshold representation:
/// the q inputs, t-1 complete and n-q-(t-1) empty predicates. Requires
/// 1 <= t <= n-q+1. When `expected` is given the union must equal it.
inline ThresholdRep pad_or_to_threshold(const std::vector<PcgRep>& decomposition, int t,
                                        const Graph* expected = nullptr) {
  if (decomposition.empty()) throw std::invalid_argument("pad_or: empty decomposition");
  const auto labels = decomposition[0].vertex_labels();
  const int n = static_cast<int>(labels.size());
  const int q = static_cast<int>(decomposition.size());
  if (t < 1 || t > n - q + 1)
    throw std::invalid_argument("pad_or: need 1 <= t <= n-q+1 (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  if (expected && !(detail::union_of(decomposition) == *expected))
    throw std::invalid_argument("pad_or: union of the decomposition differs from the target graph");
  std::vector<PcgRep> preds = decomposition;
  for (int i = 0; i < t - 1; ++i) preds.push_back(complete_witness(labels));
  for (int i = 0; i < n - q - (t - 1); ++i) preds.push_back(empty_witness(labels));
  return ThresholdRep(std::move(preds), t);
}

/// AND decomposition G = G_1 n ... n G_q to a threshold representation of
/// `width` predicates (default n = |V|): the q inputs, t-q complete and
/// width-t empty ones. Requires q <= t <= width.
inline ThresholdRep pad_and_to_threshold(const std::vector<PcgRep>& decomposition, int t,
                                         const Graph* expected = nullptr, std::optional<int> width = std::nullopt) {
  if (decomposition.empty()) throw std::invalid_argument("pad_and: empty decomposition");
  const auto labels = decomposition[0].vertex_labels();
  const int n = width.value_or(static_cast<int>(labels.size()));
  const int q = static_cast<int>(decomposition.size());
  if (t < q || t > n)
    throw std::invalid_argument("pad_and: need q <= t <= n (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  if (expected && !(detail::intersection_of(decomposition) == *expected))
    throw std::invalid_argument("pad_and: intersection of the decomposition differs from the target graph");
  std::vector<PcgRep> preds = decomposition;
  for (int i = 0; i < t - q; ++i) preds.push_back(complete_witness(labels));
  for (int i = 0; i < n - t; ++i) preds.push_back(empty_witness(labels));
  return ThresholdRep(std::move(preds), t);
}

enum class DecompositionKind { Or, And };

/// (n,t)-threshold representation of any graph on n <= 7 vertices: a single
/// PCG witness from the recognizer, padded as an OR decomposition with q = 1.
inline ThresholdRep universality_witness(const Graph& g, int t, std::size_t max_n = 7) {
  const int n = static_cast<int>(g.order());
  if (n > 7 || static_cast<std::size_t>(n) > max_n)
    throw std::invalid_argument("universality_witness: n > 7 needs a caller-supplied OR/AND decomposition");
  if (t < 1 || t > n) throw std::invalid_argument("universality_witness: need 1 <= t <= n");
  auto r = recognize_pcg(g, max_n);
  if (r.status != RecognitionStatus::Witness)
    throw std::runtime_error("universality_witness: recognizer found no PCG witness");
  return pad_or_to_threshold({*r.witness}, t, &g);
}

/// Same, from an externally supplied OR or AND decomposition of g.
inline ThresholdRep universality_witness(const Graph& g, int t, const std::vector<PcgRep>& decomposition,
                                         DecompositionKind kind) {
  return kind == DecompositionKind::Or ? pad_or_to_threshold(decomposition, t, &g)
                                       : pad_and_to_threshold(decomposition, t, &g);
}

// ---------------------------------------------------------------------------
// The K_{2k,2k} hierarchy family

/// Labels of copy c of K_{2k,2k} inside F_k, matching disjoint_union relabeling.
inline std::vector<std::string> copy_side(std::size_t copy, char side, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < 2 * k; ++i) out.push_back(copy_prefix(copy) + side + std::to_string(i));
  return out;
}

/// F_k: k+1 disjoint copies of K_{2k,2k}, labeled "c<t>.a<i>" / "c<t>.b<i>".
inline Graph family_Fk(std::size_t k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  std::vector<Graph> copies(k + 1, complete_bipartite_graph(2 * k, 2 * k));
  return disjoint_union(copies, true);
}

/// Q_t = K_n - E(K^{(t)}_{2k,2k}) with its three-cluster tree witness:
/// hub r, arms x (weight 10, holding A_t), y (10, holding B_t), z (1, the
/// rest), unit leaf edges, interval [2,13]. `t` is 1-based.
inline WitnessedGraph build_qt_witness(std::size_t k, std::size_t t) {
  if (k < 1) throw std::invalid_argument("build_qt_witness: need k >= 1");
  if (t < 1 || t > k + 1) throw std::invalid_argument("build_qt_witness: need 1 <= t <= k+1");
  const Graph fk = family_Fk(k);
  const auto side_a = copy_side(t - 1, 'a', k);
  const auto side_b = copy_side(t - 1, 'b', k);

  TreeBuilder b;
  std::size_t r = b.add_node("_r");
  std::size_t x = b.add_node("_x");
  std::size_t y = b.add_node("_y");
  std::size_t z = b.add_node("_z");
  b.add_edge(r, x, Rational(10));
  b.add_edge(r, y, Rational(10));
  b.add_edge(r, z, Rational(1));
  for (const auto& v : fk.vertices()) {
    bool in_a = std::find(side_a.begin(), side_a.end(), v) != side_a.end();
    bool in_b = std::find(side_b.begin(), side_b.end(), v) != side_b.end();
    b.add_edge(in_a ? x : in_b ? y : z, b.add_node(v), Rational(1));
  }
  b.set_root(r);

  Graph q = complement(detail::empty_graph_on(fk.vertices()));
  for (const auto& u : side_a)
    for (const auto& v : side_b) q.remove_edge(*q.index_of(u), *q.index_of(v));

  std::vector<std::pair<std::string, std::string>> map;
  for (const auto& v : fk.vertices()) map.emplace_back(v, v);
  PcgRep rep(b.build(), std::move(map), IntervalSet::closed(Rational(2), Rational(13)));
  return WitnessedGraph("Q" + std::to_string(t) + "_k" + std::to_string(k), std::move(q), Representation(std::move(rep)),
                        "complete graph minus copy " + std::to_string(t) + " of K_{2k,2k} (k=" + std::to_string(k) +
                            "), tree with arms 10/10/1 and interval [2,13]");
}

/// G_k = complement of F_k, witnessed as a (k+1)-AND of the Q_t predicates.
inline WitnessedGraph build_gk_family(std::size_t k) {
  if (k < 1) throw std::invalid_argument("build_gk_family: need k >= 1");
  std::vector<PcgRep> preds;
  for (std::size_t t = 1; t <= k + 1; ++t)
    preds.push_back(std::get<PcgRep>(*build_qt_witness(k, t).witness()));
  const int width = static_cast<int>(k + 1);
  return WitnessedGraph("G_k" + std::to_string(k), complement(family_Fk(k)),
                        Representation(ThresholdRep(std::move(preds), width)),
                        "complement of k+1 disjoint K_{2k,2k} (k=" + std::to_string(k) + "), intersection of the Q_t");
}

// ---------------------------------------------------------------------------
// Set-system incidence graphs

/// Label of the set-side vertex for S: "{a,b,c}", "#<i>" appended for repeats.
inline std::string set_vertex_label(const std::vector<std::string>& s, std::size_t repeat) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  out += "}";
  if (repeat > 0) out += "#" + std::to_string(repeat);
  return out;
}

/// Bipartite graph on ground + one vertex per member S of the family,
/// adjacent exactly to the elements of S. Repeated sets give twin vertices.
inline Graph incidence_graph(const std::vector<std::string>& ground, const std::vector<std::vector<std::string>>& family) {
  std::vector<std::string> labels = ground;
  std::map<std::string, std::size_t> repeats;
  std::set<std::string> ground_set(ground.begin(), ground.end());
  for (const auto& s : family) {
    for (const auto& a : s)
      if (!ground_set.count(a)) throw std::invalid_argument("incidence_graph: " + a + " is not in the ground set");
    auto base = set_vertex_label(s, 0);
    labels.push_back(set_vertex_label(s, repeats[base]++));
  }
  Graph g(std::move(labels));
  for (std::size_t k = 0; k < family.size(); ++k)
    for (const auto& a : family[k]) g.add_edge(*g.index_of(a), ground.size() + k);
  return g;
}

/// Ground labels a, b, c, ... (x0, x1, ... beyond 26 elements).
inline std::vector<std::string> ground_labels(std::size_t p) {
  if (p > 26) return numbered_labels("x", p);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

/// All q-subsets of the ground set, lexicographic by position.
inline std::vector<std::vector<std::string>> all_subsets_of_size(const std::vector<std::string>& ground, std::size_t q) {
  std::vector<std::vector<std::string>> out;
  if (q > ground.size()) return out;
  std::vector<std::size_t> idx(q);
  for (std::size_t i = 0; i < q; ++i) idx[i] = i;
  for (;;) {
    std::vector<std::string> s;
    for (auto i : idx) s.push_back(ground[i]);
    out.push_back(std::move(s));
    std::size_t i = q;
    while (i > 0 && idx[i - 1] == ground.size() - q + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < q; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline Graph incidence_pq(std::size_t p, std::size_t q) {
  if (q > p) throw std::invalid_argument("I(p,q) needs q <= p");
  auto ground = ground_labels(p);
  return incidence_graph(ground, all_subsets_of_size(ground, q));
}

constexpr std::size_t kDefaultHyCap = 4;

/// H_y = I(4y-3, 2y-1).
inline Graph family_Hy(std::size_t y, std::size_t cap = kDefaultHyCap) {
  if (y < 1) throw std::invalid_argument("family_Hy: need y >= 1");
  if (y > cap) throw std::invalid_argument("family_Hy: y exceeds configured cap " + std::to_string(cap));
  return incidence_pq(4 * y - 3, 2 * y - 1);
}

constexpr std::size_t kDefaultFrCap = 8;

/// F_1 = C_4, F_{r+1} = complement of two disjoint copies of F_r.
inline Graph family_Fr(std::size_t r, std::size_t cap = kDefaultFrCap) {
  if (r < 1) throw std::invalid_argument("family_Fr: need r >= 1");
  if (r > cap) throw std::invalid_argument("family_Fr: r exceeds configured cap " + std::to_string(cap));
  Graph g = cycle_graph(4);
  for (std::size_t i = 1; i < r; ++i) g = double_complement_prime(g);
  return g;
}

// ---------------------------------------------------------------------------
// Figure fixtures

namespace detail {

struct WeightedEdge {
  const char* u;
  const char* v;
  long w;
};

inline WeightedTree tree_from_list(std::initializer_list<WeightedEdge> edges, const char* root) {
  TreeBuilder b;
  std::map<std::string, std::size_t> ids;
  auto id = [&](const char* name) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    return ids[name] = b.add_node(name);
  };
  for (const auto& e : edges) b.add_edge(id(e.u), id(e.v), Rational(e.w));
  b.set_root(id(root));
  return b.build();
}

inline std::vector<std::string> eight_letters() { return {"a", "b", "c", "d", "e", "f", "g", "h"}; }

}  // namespace detail

/// Eight-leaf tree: hub with two arms of weight 10; left arm holds a,c,e,g at
/// 1,2,3,4, right arm holds f,h,b,d at 4,3,2,1.
inline WeightedTree figure1_tree() {
  return detail::tree_from_list({{"_r", "_L", 10}, {"_r", "_R", 10},
                                 {"_L", "a", 1}, {"_L", "c", 2}, {"_L", "e", 3}, {"_L", "g", 4},
                                 {"_R", "f", 4}, {"_R", "h", 3}, {"_R", "b", 2}, {"_R", "d", 1}},
                                "_r");
}

/// Caterpillar witness for H1 with interval [12,24].
inline WeightedTree figure2_tree_h1() {
  return detail::tree_from_list({{"_s5", "_s4", 1}, {"_s4", "_s3", 3}, {"_s3", "_s2", 6}, {"_s2", "_s1", 1},
                                 {"_s1", "_r", 1},
                                 {"_s5", "g", 0}, {"_s5", "d", 12}, {"_s4", "f", 9}, {"_s3", "h", 6},
                                 {"_s2", "c", 8}, {"_s1", "a", 5}, {"_r", "b", 0}, {"_r", "e", 12}},
                                "_s3");
}

/// Witness for H2 with interval [10,20].
inline WeightedTree figure2_tree_h2() {
  return detail::tree_from_list({{"_s3", "_s2", 1}, {"_s2", "_s1", 4}, {"_s1", "_r", 4}, {"_s1", "_t1", 3},
                                 {"_s3", "d", 1}, {"_s3", "c", 3}, {"_s2", "a", 6},
                                 {"_t1", "g", 7}, {"_t1", "f", 1},
                                 {"_r", "b", 10}, {"_r", "e", 0}, {"_r", "h", 8}},
                                "_s1");
}

namespace golden {

// Edge lists transcribed from the drawn panels; tests re-derive them from the trees.
inline const std::vector<Edge>& figure1_panel_b() {
  static const std::vector<Edge> e = {{"a", "e"}, {"a", "g"}, {"c", "e"}, {"c", "g"}, {"e", "g"},
                                      {"f", "h"}, {"b", "f"}, {"d", "f"}, {"b", "h"}, {"d", "h"},
                                      {"a", "d"}, {"a", "b"}, {"c", "d"}};
  return e;
}

inline const std::vector<Edge>& figure1_panel_c() {
  static const std::vector<Edge> e = {{"a", "c"}, {"a", "e"}, {"a", "g"}, {"c", "e"}, {"c", "g"}, {"e", "g"},
                                      {"b", "d"}, {"b", "f"}, {"b", "h"}, {"d", "f"}, {"d", "h"}, {"f", "h"},
                                      {"a", "f"}, {"c", "h"}, {"b", "e"}, {"d", "g"}};
  return e;
}

/// Edges common to H1 and H2 (the graph B).
inline const std::vector<Edge>& figure2_common() {
  static const std::vector<Edge> e = {{"a", "c"}, {"a", "e"}, {"a", "f"}, {"a", "g"}, {"b", "d"}, {"b", "e"},
                                      {"b", "f"}, {"b", "h"}, {"c", "e"}, {"c", "g"}, {"c", "h"}, {"d", "f"},
                                      {"d", "g"}, {"d", "h"}, {"e", "g"}, {"f", "h"}};
  return e;
}

inline std::vector<Edge> figure2_h1() {
  auto e = figure2_common();
  e.push_back({"a", "h"});
  e.push_back({"b", "g"});
  return e;
}

inline std::vector<Edge> figure2_h2() {
  auto e = figure2_common();
  e.push_back({"c", "f"});
  e.push_back({"d", "e"});
  return e;
}

inline std::vector<Edge> figure2_a() {
  auto e = figure2_h1();
  e.push_back({"c", "f"});
  e.push_back({"d", "e"});
  return e;
}

}  // namespace golden

inline PcgRep figure2_h1_rep() {
  return PcgRep::identity(figure2_tree_h1(), IntervalSet::closed(Rational(12), Rational(24)));
}
inline PcgRep figure2_h2_rep() {
  return PcgRep::identity(figure2_tree_h2(), IntervalSet::closed(Rational(10), Rational(20)));
}

inline std::vector<std::string> fixture_names() { return {"figure1", "figure2", "figure3", "complete", "empty"}; }

/// Named fixtures. `n` is used by "complete" and "empty".
inline std::vector<WitnessedGraph> fixture(const std::string& name, std::size_t n = 0) {
  using detail::eight_letters;
  std::vector<WitnessedGraph> out;
  if (name == "figure1") {
    auto tree = figure1_tree();
    out.emplace_back("figure1_b", Graph(eight_letters(), golden::figure1_panel_b()),
                     Representation(PcgRep::identity(tree, IntervalSet::closed(Rational(4), Rational(23)))),
                     "figure1 panel (b): PCG of the eight-leaf tree with [4,23]");
    out.emplace_back("figure1_c", Graph(eight_letters(), golden::figure1_panel_c()),
                     Representation(PcgRep::identity(tree, IntervalSet::parse("[3,7] U [25,25]"))),
                     "figure1 panel (c): 2-interval PCG of the same tree with [3,7] U [25,25]");
  } else if (name == "figure2") {
    auto h1 = figure2_h1_rep();
    auto h2 = figure2_h2_rep();
    out.emplace_back("H1", Graph(eight_letters(), golden::figure2_h1()), Representation(h1),
                     "figure2 panels (a,b): H1 = PCG(T1,[12,24])");
    out.emplace_back("H2", Graph(eight_letters(), golden::figure2_h2()), Representation(h2),
                     "figure2 panels (c,d): H2 = PCG(T2,[10,20])");
    out.emplace_back("A", Graph(eight_letters(), golden::figure2_a()), Representation(ThresholdRep({h1, h2}, 1)),
                     "figure2 panel (e): A = H1 u H2, a (2,1)-threshold PCG");
    out.emplace_back("B", Graph(eight_letters(), golden::figure2_common()), Representation(ThresholdRep({h1, h2}, 2)),
                     "figure2 panel (f): B = H1 n H2, a (2,2)-threshold PCG");
  } else if (name == "figure3") {
    out.emplace_back("I(5,3)", incidence_pq(5, 3), std::nullopt, "figure3: incidence graph of all 3-subsets of a 5-set");
  } else if (name == "complete") {
    if (n < 1) throw std::invalid_argument("fixture complete needs n >= 1");
    auto g = complete_graph(n);
    out.emplace_back("K" + std::to_string(n), g, Representation(complete_witness(g.vertices())),
                     "complete graph: unit star with [2,2]");
  } else if (name == "empty") {
    if (n < 1) throw std::invalid_argument("fixture empty needs n >= 1");
    auto g = empty_graph(n);
    out.emplace_back("E" + std::to_string(n), g, Representation(empty_witness(g.vertices())),
                     "empty graph: unit star with no admissible distance");
  } else {
    throw std::invalid_argument("unknown fixture: " + name);
  }
  return out;
}

}  // namespace pcglab
