#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "intervals.hpp"
#include "json.hpp"
#include "tree.hpp"

namespace pcglab {

/// One PCG predicate: a weighted tree, a vertex-to-leaf bijection and the
/// admissible distance set.
class PcgRep {
 public:
  /// `leaf_map` pairs (vertex label, leaf label); its order is the vertex order.
  PcgRep(WeightedTree tree, std::vector<std::pair<std::string, std::string>> leaf_map, IntervalSet intervals)
      : tree_(std::move(tree)), leaf_map_(std::move(leaf_map)), intervals_(std::move(intervals)) {
    std::set<std::string> leaves;
    for (auto i : tree_.leaves()) leaves.insert(tree_.name(i));
    if (leaf_map_.size() != leaves.size())
      throw std::invalid_argument("leaf map must cover every leaf exactly once");
    std::set<std::string> seen_v, seen_l;
    for (const auto& [v, l] : leaf_map_) {
      if (!leaves.count(l)) throw std::invalid_argument("leaf map targets unknown leaf " + l);
      if (!seen_v.insert(v).second) throw std::invalid_argument("leaf map repeats vertex " + v);
      if (!seen_l.insert(l).second) throw std::invalid_argument("leaf map repeats leaf " + l);
    }
  }

  /// Vertices named after the leaves themselves.
  static PcgRep identity(WeightedTree tree, IntervalSet intervals) {
    std::vector<std::pair<std::string, std::string>> map;
    for (const auto& l : tree.leaf_labels()) map.emplace_back(l, l);
    return PcgRep(std::move(tree), std::move(map), std::move(intervals));
  }

  const WeightedTree& tree() const { return tree_; }
  const std::vector<std::pair<std::string, std::string>>& leaf_map() const { return leaf_map_; }
  const IntervalSet& intervals() const { return intervals_; }

  std::vector<std::string> vertex_labels() const {
    std::vector<std::string> out;
    for (const auto& [v, l] : leaf_map_) out.push_back(v);
    return out;
  }

 private:
  WeightedTree tree_;
  std::vector<std::pair<std::string, std::string>> leaf_map_;
  IntervalSet intervals_;
};

/// k predicates on a shared vertex set; a pair is an edge when at least
/// `threshold` predicates accept it.
class ThresholdRep {
 public:
  ThresholdRep(std::vector<PcgRep> predicates, int threshold)
      : predicates_(std::move(predicates)), threshold_(threshold) {
    if (predicates_.empty()) throw std::invalid_argument("threshold rep needs at least one predicate");
    if (threshold_ < 1 || threshold_ > static_cast<int>(predicates_.size()))
      throw std::invalid_argument("threshold must satisfy 1 <= t <= k");
    auto base = predicates_[0].vertex_labels();
    std::sort(base.begin(), base.end());
    for (const auto& p : predicates_) {
      auto vs = p.vertex_labels();
      std::sort(vs.begin(), vs.end());
      if (vs != base) throw std::invalid_argument("all predicates must share one vertex set");
    }
  }

  const std::vector<PcgRep>& predicates() const { return predicates_; }
  int threshold() const { return threshold_; }
  std::size_t width() const { return predicates_.size(); }

 private:
  std::vector<PcgRep> predicates_;
  int threshold_;
};

using Representation = std::variant<PcgRep, ThresholdRep>;

// ---------------------------------------------------------------------------
// Evaluation

inline Graph eval_pcg(const PcgRep& rep) {
  Graph g(rep.vertex_labels());
  const auto& map = rep.leaf_map();
  if (map.size() < 2) return g;
  const auto& t = rep.tree();
  for (std::size_t i = 0; i < map.size(); ++i) {
    auto dist = t.distances_from(*t.find(map[i].second));
    for (std::size_t j = i + 1; j < map.size(); ++j)
      if (rep.intervals().contains(dist[*t.find(map[j].second)])) g.add_edge(i, j);
  }
  return g;
}

inline Graph eval_threshold(const ThresholdRep& trep) {
  const auto& preds = trep.predicates();
  Graph out(preds[0].vertex_labels());
  const std::size_t n = out.order();
  std::vector<int> votes(n * n, 0);
  for (const auto& p : preds) {
    Graph g = eval_pcg(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (g.adjacent(out.label(i), out.label(j))) ++votes[i * n + j];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (votes[i * n + j] >= trep.threshold()) out.add_edge(i, j);
  return out;
}

inline Graph eval(const Representation& rep) {
  return std::visit(
      [](const auto& r) -> Graph {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, PcgRep>) return eval_pcg(r);
        else return eval_threshold(r);
      },
      rep);
}

inline std::vector<std::string> vertex_labels(const Representation& rep) {
  if (auto p = std::get_if<PcgRep>(&rep)) return p->vertex_labels();
  return std::get<ThresholdRep>(rep).predicates()[0].vertex_labels();
}

// ---------------------------------------------------------------------------
// Verification

enum class MismatchKind { MissingEdge, ExtraEdge };

inline const char* to_string(MismatchKind k) { return k == MismatchKind::MissingEdge ? "missing-edge" : "extra-edge"; }

struct Mismatch {
  std::string u;
  std::string v;
  MismatchKind kind;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  bool valid = false;
  std::vector<Mismatch> mismatches;  // sorted by (u, v), u < v
};

/// Compares the evaluated representation with `target`. A missing edge is
/// in the target but not produced; an extra edge is produced but absent.
inline VerificationReport verify_representation(const Representation& rep, const Graph& target) {
  Graph produced = eval(rep);
  if (produced.order() != target.order())
    throw std::invalid_argument("verify: vertex sets differ in size");
  for (const auto& v : produced.vertices())
    if (!target.has_vertex(v)) throw std::invalid_argument("verify: vertex " + v + " not in target");

  VerificationReport report;
  for (std::size_t i = 0; i < produced.order(); ++i)
    for (std::size_t j = i + 1; j < produced.order(); ++j) {
      bool have = produced.adjacent(i, j);
      bool want = target.adjacent(produced.label(i), produced.label(j));
      if (have == want) continue;
      auto [u, v] = Graph::canonical_edge(produced.label(i), produced.label(j));
      report.mismatches.push_back({u, v, want ? MismatchKind::MissingEdge : MismatchKind::ExtraEdge});
    }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  report.valid = report.mismatches.empty();
  return report;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json mm = nlohmann::json::array();
  for (const auto& m : r.mismatches) mm.push_back({{"u", m.u}, {"v", m.v}, {"kind", to_string(m.kind)}});
  return {{"valid", r.valid}, {"mismatches", std::move(mm)}};
}

// ---------------------------------------------------------------------------
// JSON
//
// pcg:       {"type":"pcg", "tree":<tree JSON or Newick string>,
//             "leaf_map":[["vertex","leaf"],...], "intervals":[...] | "[a,b] U ..."}
// threshold: {"type":"threshold", "threshold":t, "predicates":[<pcg>,...]}

inline nlohmann::json to_json(const PcgRep& rep) {
  nlohmann::json map = nlohmann::json::array();
  for (const auto& [v, l] : rep.leaf_map()) map.push_back({v, l});
  return {{"type", "pcg"},
          {"tree", to_json(rep.tree())},
          {"leaf_map", std::move(map)},
          {"intervals", to_json(rep.intervals())}};
}

inline nlohmann::json to_json(const ThresholdRep& rep) {
  nlohmann::json preds = nlohmann::json::array();
  for (const auto& p : rep.predicates()) preds.push_back(to_json(p));
  return {{"type", "threshold"}, {"threshold", rep.threshold()}, {"predicates", std::move(preds)}};
}

inline nlohmann::json to_json(const Representation& rep) {
  return std::visit([](const auto& r) { return to_json(r); }, rep);
}

inline PcgRep pcg_rep_from_json(const nlohmann::json& j) {
  try {
    WeightedTree tree = j.contains("tree") ? tree_from_json(j.at("tree")) : from_newick(j.at("newick").get<std::string>());
    IntervalSet intervals = intervals_from_json(j.at("intervals"));
    if (!j.contains("leaf_map")) return PcgRep::identity(std::move(tree), std::move(intervals));
    std::vector<std::pair<std::string, std::string>> map;
    for (const auto& e : j.at("leaf_map")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("leaf_map entries must be [vertex, leaf]");
      map.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return PcgRep(std::move(tree), std::move(map), std::move(intervals));
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("pcg rep JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("pcg rep JSON: ") + ex.what());
  }
}

inline Representation representation_from_json(const nlohmann::json& j) {
  try {
    std::string type = j.value("type", j.contains("predicates") ? "threshold" : "pcg");
    if (type == "pcg") return pcg_rep_from_json(j);
    if (type != "threshold") throw FormatError("unknown representation type " + type);
    std::vector<PcgRep> preds;
    for (const auto& p : j.at("predicates")) preds.push_back(pcg_rep_from_json(p));
    return ThresholdRep(std::move(preds), j.at("threshold").get<int>());
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("representation JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("representation JSON: ") + ex.what());
  }
}

}  // namespace pcglab
