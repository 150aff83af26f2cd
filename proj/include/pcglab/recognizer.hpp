#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "json.hpp"
#include "lp.hpp"
#include "pcg.hpp"
#include "topology.hpp"
#include "tree.hpp"

namespace pcglab {

enum class RecognitionStatus { Witness, RefutedExhaustive, CertificateNonPcg, Inconclusive };

inline const char* to_string(RecognitionStatus s) {
  switch (s) {
    case RecognitionStatus::Witness: return "witness";
    case RecognitionStatus::RefutedExhaustive: return "refuted-exhaustive";
    case RecognitionStatus::CertificateNonPcg: return "certificate-non-pcg";
    case RecognitionStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// CLI exit code for each status.
inline int exit_code(RecognitionStatus s) {
  switch (s) {
    case RecognitionStatus::Witness: return 0;
    case RecognitionStatus::RefutedExhaustive: return 10;
    case RecognitionStatus::CertificateNonPcg: return 20;
    case RecognitionStatus::Inconclusive: return 30;
  }
  return 30;
}

/// Two vertex-disjoint chordless cycles (length >= 4) in the complement with
/// no complement edge between them. Vertices listed in cycle order.
struct NonPcgCertificate {
  std::vector<std::string> first;
  std::vector<std::string> second;
};

struct RecognitionStats {
  std::size_t topologies_tried = 0;
  std::size_t feasibility_calls = 0;
  std::size_t search_nodes = 0;
  double elapsed_seconds = 0;
};

struct RecognitionResult {
  RecognitionStatus status = RecognitionStatus::Inconclusive;
  std::optional<PcgRep> witness;
  std::optional<NonPcgCertificate> certificate;
  RecognitionStats stats;
};

struct RecognizerOptions {
  std::size_t max_n = 6;
  bool leaf_power = false;
  std::size_t workers = 1;
};

namespace detail {

/// Depth-first side assignment for one fixed topology.
///
/// Variables: one weight per tree edge, then d_min, d_max. Edges of the graph
/// need d_min <= D_uv <= d_max. A non-edge takes the low side
/// D_uv <= d_min - 1 or the high side D_uv >= d_max + 1; the unit gap stands
/// in for strictness because the whole system is invariant under positive
/// scaling. Feasibility is decided by exact simplex; a point already
/// satisfying a newly added constraint is carried down without a solver call.
class TopologySearch {
 public:
  TopologySearch(const Graph& g, const Topology& topo, bool leaf_power)
      : g_(g), topo_(topo), leaf_power_(leaf_power), edges_(topo.edges.size()), dmin_(edges_), dmax_(edges_ + 1) {
    paths_ = topo_.leaf_paths();
    const std::size_t n = g_.order();

    base_.push_back({{{dmin_, Rational(1)}, {dmax_, Rational(-1)}}, Rational(0)});
    if (leaf_power_) base_.push_back({{{dmin_, Rational(1)}}, Rational(0)});
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        if (g_.adjacent(u, v)) {
          base_.push_back(distance_minus(u, v, dmin_, -1));
          base_.push_back(distance_minus(u, v, dmax_, 1));
        } else {
          non_edges_.emplace_back(u, v);
        }
      }
    order_non_edges();
  }

  std::optional<std::vector<Rational>> run(RecognitionStats& stats) {
    std::vector<Rational> point(edges_ + 2, Rational(0));  // all-zero satisfies the base system
    constraints_ = base_;
    if (!lp::satisfies(constraints_, point)) {
      ++stats.feasibility_calls;
      auto p = lp::FeasibilitySolver(edges_ + 2).solve(constraints_);
      if (!p) return std::nullopt;
      point = std::move(*p);
    }
    return dfs(0, point, stats);
  }

 private:
  // sign = +1: D_uv - var <= 0 ; sign = -1: var - D_uv <= 0
  lp::Constraint distance_minus(std::size_t u, std::size_t v, std::size_t var, int sign) const {
    lp::Constraint c;
    auto mask = paths_[u * topo_.leaves + v];
    for (std::size_t e = 0; e < edges_; ++e)
      if (mask >> e & 1) c.terms.emplace_back(e, Rational(sign));
    c.terms.emplace_back(var, Rational(-sign));
    c.rhs = 0;
    return c;
  }

  lp::Constraint side_constraint(std::size_t k, bool low) const {
    auto [u, v] = non_edges_[k];
    // low: D - dmin <= -1 ; high: dmax - D <= -1
    lp::Constraint c = low ? distance_minus(u, v, dmin_, 1) : distance_minus(u, v, dmax_, -1);
    c.rhs = -1;
    return c;
  }

  Rational distance(const std::vector<Rational>& x, std::size_t u, std::size_t v) const {
    Rational d = 0;
    auto mask = paths_[u * topo_.leaves + v];
    for (std::size_t e = 0; e < edges_; ++e)
      if (mask >> e & 1) d += x[e];
    return d;
  }

  static bool holds(const lp::Constraint& c, const std::vector<Rational>& x) {
    Rational lhs = 0;
    for (const auto& [var, coef] : c.terms) lhs += coef * x[var];
    return lhs <= c.rhs;
  }

  /// Heuristic: non-edges whose tree paths overlap the most edge paths first;
  /// ties keep lexicographic (u, v) order.
  void order_non_edges() {
    const std::size_t n = g_.order();
    std::vector<std::pair<long, std::size_t>> keyed;
    for (std::size_t k = 0; k < non_edges_.size(); ++k) {
      auto mask = paths_[non_edges_[k].first * topo_.leaves + non_edges_[k].second];
      long score = 0;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (g_.adjacent(u, v)) score += std::popcount(mask & paths_[u * topo_.leaves + v]);
      keyed.emplace_back(-score, k);
    }
    std::stable_sort(keyed.begin(), keyed.end());
    std::vector<std::pair<std::size_t, std::size_t>> ordered;
    for (auto [s, k] : keyed) ordered.push_back(non_edges_[k]);
    non_edges_ = std::move(ordered);
  }

  bool separates_remaining(std::size_t depth, const std::vector<Rational>& x) const {
    for (std::size_t k = depth; k < non_edges_.size(); ++k) {
      Rational d = distance(x, non_edges_[k].first, non_edges_[k].second);
      if (!(d < x[dmin_] || d > x[dmax_])) return false;
    }
    return true;
  }

  std::optional<std::vector<Rational>> dfs(std::size_t depth, const std::vector<Rational>& x, RecognitionStats& stats) {
    ++stats.search_nodes;
    if (separates_remaining(depth, x)) return x;

    std::vector<bool> sides;
    if (leaf_power_) {
      sides = {false};
    } else {
      // try first the side the current point is closer to
      Rational d = distance(x, non_edges_[depth].first, non_edges_[depth].second);
      bool low_first = (x[dmin_] - d) >= (d - x[dmax_]);
      sides = {low_first, !low_first};
    }
    for (bool low : sides) {
      constraints_.push_back(side_constraint(depth, low));
      std::optional<std::vector<Rational>> next;
      if (holds(constraints_.back(), x)) {
        next = x;
      } else {
        ++stats.feasibility_calls;
        next = lp::FeasibilitySolver(edges_ + 2).solve(constraints_);
      }
      if (next) {
        auto found = dfs(depth + 1, *next, stats);
        if (found) {
          constraints_.pop_back();
          return found;
        }
      }
      constraints_.pop_back();
    }
    return std::nullopt;
  }

  const Graph& g_;
  const Topology& topo_;
  bool leaf_power_;
  std::size_t edges_;
  std::size_t dmin_;
  std::size_t dmax_;
  std::vector<std::uint64_t> paths_;
  std::vector<lp::Constraint> base_;
  std::vector<lp::Constraint> constraints_;
  std::vector<std::pair<std::size_t, std::size_t>> non_edges_;
};

inline PcgRep witness_from_point(const Graph& g, const Topology& topo, const std::vector<Rational>& x) {
  TreeBuilder b;
  for (std::size_t i = 0; i < topo.nodes; ++i) b.add_node(i < topo.leaves ? g.label(i) : std::string{});
  for (std::size_t e = 0; e < topo.edges.size(); ++e) b.add_edge(topo.edges[e].first, topo.edges[e].second, x[e]);
  b.set_root(topo.nodes > topo.leaves ? topo.leaves : 0);
  const std::size_t m = topo.edges.size();
  return PcgRep::identity(b.build(), IntervalSet::closed(x[m], x[m + 1]));
}

struct TopologyOutcome {
  bool done = false;
  std::optional<std::vector<Rational>> point;
  RecognitionStats stats;
};

}  // namespace detail

/// Exact small-instance recognition over all binary topologies.
///
/// Zero-weight edges are allowed, so binary topologies cover every reduced
/// witness tree. Topologies are tried in a fixed order; with several workers
/// the reported witness and statistics are those of the sequential run.
inline RecognitionResult recognize(const Graph& g, const RecognizerOptions& opts) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("recognize: empty graph");
  if (n > opts.max_n)
    throw std::invalid_argument("recognize: graph has " + std::to_string(n) + " vertices, limit is " +
                                std::to_string(opts.max_n));
  auto start = std::chrono::steady_clock::now();
  RecognitionResult result;

  if (n == 1) {
    TreeBuilder b;
    b.add_node(g.label(0));
    result.status = RecognitionStatus::Witness;
    result.witness = PcgRep::identity(b.build(), IntervalSet::closed(Rational(0), Rational(0)));
    result.stats.topologies_tried = 1;
    return result;
  }

  const auto topologies = binary_topologies(n);
  std::vector<detail::TopologyOutcome> outcomes(topologies.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= topologies.size() || i > best.load()) return;
      detail::TopologySearch search(g, topologies[i], opts.leaf_power);
      auto& out = outcomes[i];
      out.point = search.run(out.stats);
      out.stats.topologies_tried = 1;
      out.done = true;
      if (out.point) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, opts.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::size_t last = std::min(best.load(), topologies.size() - 1);
  for (std::size_t i = 0; i <= last; ++i) {
    const auto& s = outcomes[i].stats;
    result.stats.topologies_tried += s.topologies_tried;
    result.stats.feasibility_calls += s.feasibility_calls;
    result.stats.search_nodes += s.search_nodes;
  }

  if (best.load() < topologies.size()) {
    const auto& point = *outcomes[best.load()].point;
    PcgRep rep = detail::witness_from_point(g, topologies[best.load()], point);
    if (!verify_representation(rep, g).valid) throw std::logic_error("recognizer produced a non-verifying witness");
    result.status = RecognitionStatus::Witness;
    result.witness = std::move(rep);
  } else {
    result.status = RecognitionStatus::RefutedExhaustive;
  }
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline RecognitionResult recognize_pcg(const Graph& g, std::size_t max_n = 6, std::size_t workers = 1) {
  return recognize(g, {max_n, false, workers});
}

/// Leaf powers: d_min pinned to 0, so each non-edge has only the high side.
inline RecognitionResult recognize_leaf_power(const Graph& g, std::size_t max_n = 8, std::size_t workers = 1) {
  return recognize(g, {max_n, true, workers});
}

// ---------------------------------------------------------------------------
// Non-PCG certificate

namespace detail {

/// Shortest chordless cycle of length >= 4 inside `members`, or empty.
///
/// For every induced path a-b-c, a shortest a..c path avoiding b's other
/// neighbours closes a hole through b; shortest such paths are induced.
inline std::vector<std::size_t> shortest_hole(const Graph& h, const std::vector<std::size_t>& members) {
  std::vector<bool> in(h.order(), false);
  for (auto v : members) in[v] = true;
  std::vector<std::size_t> best;

  for (auto b : members) {
    std::vector<std::size_t> nb;
    for (auto v : members)
      if (h.adjacent(b, v)) nb.push_back(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        std::size_t a = nb[i], c = nb[j];
        if (h.adjacent(a, c)) continue;
        // BFS from a to c in members minus N[b], keeping a and c
        std::vector<long> parent(h.order(), -2);
        std::vector<std::size_t> queue{a};
        parent[a] = -1;
        for (std::size_t q = 0; q < queue.size() && parent[c] == -2; ++q) {
          auto u = queue[q];
          for (auto v : members) {
            if (parent[v] != -2 || !h.adjacent(u, v) || v == b) continue;
            if (v != c && h.adjacent(b, v)) continue;
            parent[v] = static_cast<long>(u);
            queue.push_back(v);
          }
        }
        if (parent[c] == -2) continue;
        std::vector<std::size_t> cycle{b};
        for (long v = static_cast<long>(c); v != -1; v = parent[v]) cycle.push_back(static_cast<std::size_t>(v));
        if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
      }
  }
  return best;
}

inline bool is_chordless_cycle(const Graph& h, const std::vector<std::size_t>& cyc) {
  const std::size_t k = cyc.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (h.adjacent(cyc[i], cyc[j]) != consecutive) return false;
    }
  return true;
}

}  // namespace detail

/// Sufficient condition for non-PCG-ness: the complement has two
/// vertex-disjoint chordless cycles of length at least 4 with no edge
/// between them. Searched for across distinct components of the complement.
inline RecognitionResult non_pcg_certificate(const Graph& g) {
  auto start = std::chrono::steady_clock::now();
  Graph h = complement(g);
  std::vector<std::vector<std::size_t>> holes;
  for (const auto& comp : connected_components(h)) {
    if (comp.size() < 4) continue;
    auto hole = detail::shortest_hole(h, comp);
    if (hole.empty()) continue;
    if (!detail::is_chordless_cycle(h, hole)) throw std::logic_error("hole search returned a chorded cycle");
    holes.push_back(std::move(hole));
    if (holes.size() == 2) break;
  }
  RecognitionResult result;
  if (holes.size() == 2) {
    NonPcgCertificate cert;
    for (auto v : holes[0]) cert.first.push_back(g.label(v));
    for (auto v : holes[1]) cert.second.push_back(g.label(v));
    result.status = RecognitionStatus::CertificateNonPcg;
    result.certificate = std::move(cert);
  } else {
    result.status = RecognitionStatus::Inconclusive;
  }
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline nlohmann::json to_json(const RecognitionResult& r) {
  nlohmann::json j = {{"status", to_string(r.status)},
                      {"stats",
                       {{"topologies_tried", r.stats.topologies_tried},
                        {"feasibility_calls", r.stats.feasibility_calls},
                        {"search_nodes", r.stats.search_nodes}}}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.certificate) j["certificate"] = {{"first", r.certificate->first}, {"second", r.certificate->second}};
  return j;
}

// ---------------------------------------------------------------------------
// Census

enum class CensusMode { Labeled, Unlabeled };

struct CensusEntry {
  std::string graph6;          // smallest labeled member of the isomorphism class
  std::size_t labeled_count;   // size of the class among labeled graphs on [n]
  RecognitionStatus status;
  std::size_t topologies_tried;
  std::optional<PcgRep> witness;
};

struct CensusReport {
  std::size_t n = 0;
  CensusMode mode = CensusMode::Unlabeled;
  std::size_t graphs = 0;  // classes (unlabeled) or labeled graphs
  std::size_t witnesses = 0;
  std::size_t refutations = 0;
  std::size_t inconclusive = 0;
  std::size_t labeled_total = 0;
  std::size_t labeled_pcgs = 0;  // P_n
  std::vector<std::string> warnings;
  std::vector<CensusEntry> entries;
};

namespace detail {

/// Pair (i,j), i<j, to bit index in the upper-triangle enumeration order.
inline std::vector<std::size_t> pair_bits(std::size_t n) {
  std::vector<std::size_t> bit(n * n, 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) bit[i * n + j] = bit[j * n + i] = k++;
  return bit;
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(numbered_labels("v", n));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if (mask >> k & 1) g.add_edge(i, j);
  return g;
}

}  // namespace detail

/// Classifies every graph on n vertices with the recognizer. Graphs are
/// grouped into isomorphism classes (orbits of vertex permutations); each
/// class is recognized once, since PCG membership is invariant under
/// relabeling, and labeled counts come from the orbit sizes.
inline CensusReport census(std::size_t n, CensusMode mode, std::size_t max_n = 6, std::size_t workers = 1) {
  if (n < 1) throw std::invalid_argument("census needs n >= 1");
  if (n > max_n) throw std::invalid_argument("census: n=" + std::to_string(n) + " exceeds limit " + std::to_string(max_n));
  CensusReport report;
  report.n = n;
  report.mode = mode;
  if (n >= 6) report.warnings.push_back("n >= 6: exhaustive census is slow");

  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  report.labeled_total = static_cast<std::size_t>(total);
  const auto bit = detail::pair_bits(n);

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> seen(total, false);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    std::size_t orbit = 0;
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++k)
          if (mask >> k & 1) image |= std::uint64_t{1} << bit[p[i] * n + p[j]];
      if (!seen[image]) {
        seen[image] = true;
        ++orbit;
      }
    }
    Graph g = detail::graph_from_mask(n, mask);
    auto r = recognize_pcg(g, max_n, workers);
    report.entries.push_back({to_graph6(g), orbit, r.status, r.stats.topologies_tried, r.witness});
    std::size_t weight = mode == CensusMode::Unlabeled ? 1 : orbit;
    report.graphs += weight;
    if (r.status == RecognitionStatus::Witness) {
      report.witnesses += weight;
      report.labeled_pcgs += orbit;
    } else if (r.status == RecognitionStatus::RefutedExhaustive) {
      report.refutations += weight;
    } else {
      report.inconclusive += weight;
    }
  }
  return report;
}

inline nlohmann::json to_json(const CensusReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"graph6", e.graph6},
                       {"labeled_count", e.labeled_count},
                       {"status", to_string(e.status)},
                       {"topologies_tried", e.topologies_tried}});
  return {{"n", r.n},
          {"mode", r.mode == CensusMode::Labeled ? "labeled" : "unlabeled"},
          {"graphs", r.graphs},
          {"witnesses", r.witnesses},
          {"refutations", r.refutations},
          {"inconclusive", r.inconclusive},
          {"labeled_total", r.labeled_total},
          {"labeled_pcgs", r.labeled_pcgs},
          {"warnings", r.warnings},
          {"classes", std::move(entries)}};
}

}  // namespace pcglab
