#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "intervals.hpp"
#include "json.hpp"
#include "tree.hpp"

namespace pcglab {

/// Per-edge arrangement statistics.
struct EdgeShellStats {
  std::string u;
  std::string v;
  Rational weight;
  std::size_t lines = 0;   // distinct boundary lines on the edge
  std::size_t shells = 0;  // distinct subsets realized with x on the edge

  /// 1 + L + L(L-1)/2 + 2(L+1)
  std::size_t face_bound() const { return 1 + lines + lines * (lines ? lines - 1 : 0) / 2 + 2 * (lines + 1); }
};

/// Subsets X(x, lambda) = {a : d(x,a) + lambda in I}, as bitstrings over
/// `ground` ('1' = member), sorted.
struct ShellFamily {
  std::vector<std::string> ground;
  std::set<std::string> shells;
  std::vector<EdgeShellStats> edges;

  std::size_t size() const { return shells.size(); }
  bool contains(const std::vector<std::string>& subset) const { return shells.count(encode(subset)) > 0; }

  std::string encode(const std::vector<std::string>& subset) const {
    std::string bits(ground.size(), '0');
    for (const auto& a : subset) {
      auto it = std::find(ground.begin(), ground.end(), a);
      if (it == ground.end()) throw std::invalid_argument("not a ground element: " + a);
      bits[static_cast<std::size_t>(it - ground.begin())] = '1';
    }
    return bits;
  }
};

namespace detail {

struct LeafLine {
  int sigma;  // d(x,a) = sigma * x + c
  Rational c;
};

inline void sweep_lambda(const std::vector<LeafLine>& leaves, const IntervalSet& intervals, const Rational& x,
                         const std::vector<Rational>& endpoints, std::set<std::string>& out) {
  std::vector<Rational> d;
  d.reserve(leaves.size());
  for (const auto& l : leaves) d.push_back(l.sigma * x + l.c);

  std::vector<Rational> breaks;
  for (const auto& da : d)
    for (const auto& e : endpoints) breaks.push_back(e - da);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  auto emit = [&](const Rational& lambda) {
    std::string bits(d.size(), '0');
    for (std::size_t a = 0; a < d.size(); ++a)
      if (intervals.contains(d[a] + lambda)) bits[a] = '1';
    out.insert(std::move(bits));
  };

  if (breaks.empty()) {
    emit(Rational(0));
    return;
  }
  emit(breaks.front() - 1);
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    emit(breaks[i]);
    if (i + 1 < breaks.size()) emit((breaks[i] + breaks[i + 1]) / 2);
  }
  emit(breaks.back() + 1);
}

}  // namespace detail

/// Exact shell family of (t, intervals). The tree is reduced first; its
/// geometric realization is unchanged by that. Zero-weight edges are points.
inline ShellFamily enumerate_shells(const WeightedTree& input, const IntervalSet& intervals) {
  const WeightedTree t = is_reduced(input) ? input : reduce(input);
  ShellFamily fam;
  fam.ground = t.leaf_labels();
  const auto endpoints = intervals.endpoints();

  // leaves in ground order
  std::vector<std::size_t> order;
  for (const auto& l : fam.ground) order.push_back(*t.find(l));

  if (t.edge_count() == 0) {
    std::vector<detail::LeafLine> one{{0, Rational(0)}};
    detail::sweep_lambda(one, intervals, Rational(0), endpoints, fam.shells);
    return fam;
  }

  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const auto& edge = t.edges()[e];
    const Rational& len = edge.weight;
    auto du = t.distances_from(edge.u);
    auto dv = t.distances_from(edge.v);
    auto u_side = t.side_of_edge(e, edge.u);

    // x = distance from edge.u along the edge
    std::vector<detail::LeafLine> leaves;
    for (auto a : order) {
      if (u_side[a]) leaves.push_back({+1, du[a]});
      else leaves.push_back({-1, len + dv[a]});
    }

    // lambda = endpoint - sigma * x - c, stored as (sigma, endpoint - c)
    std::set<std::pair<int, Rational>> lines;
    for (const auto& l : leaves)
      for (const auto& p : endpoints) lines.insert({l.sigma, p - l.c});

    std::vector<Rational> xs{Rational(0), len};
    for (const auto& [s1, k1] : lines) {
      if (s1 != +1) continue;
      for (const auto& [s2, k2] : lines) {
        if (s2 != -1) continue;
        Rational x = (k1 - k2) / 2;  // k1 - x = k2 + x
        if (x > 0 && x < len) xs.push_back(x);
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const std::size_t critical = xs.size();
    for (std::size_t i = 0; i + 1 < critical; ++i) xs.push_back((xs[i] + xs[i + 1]) / 2);

    std::set<std::string> local;
    for (const auto& x : xs) detail::sweep_lambda(leaves, intervals, x, endpoints, local);

    EdgeShellStats stats{t.name(edge.u), t.name(edge.v), len, lines.size(), local.size()};
    fam.edges.push_back(std::move(stats));
    fam.shells.insert(local.begin(), local.end());
  }
  return fam;
}

inline nlohmann::json to_json(const ShellFamily& f) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : f.edges)
    edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", format_rational(e.weight)}, {"lines", e.lines},
                     {"shells", e.shells}, {"face_bound", e.face_bound()}});
  return {{"ground", f.ground},
          {"count", f.shells.size()},
          {"shells", std::vector<std::string>(f.shells.begin(), f.shells.end())},
          {"edges", std::move(edges)}};
}

// ---------------------------------------------------------------------------
// Product bound

struct BoundReport {
  std::size_t ground_size = 0;
  mpz_class family_size;
  std::vector<mpz_class> shell_counts;
  mpz_class product;
  bool feasible = false;           // family_size <= product
  std::optional<std::size_t> min_k;  // least k with max_count^k >= family_size; none if unreachable
};

/// Necessary condition for realizing s distinct neighbourhoods with
/// constituents whose shell families have the given sizes.
inline BoundReport shell_bound_report(std::size_t m, const mpz_class& s, const std::vector<mpz_class>& counts) {
  if (m == 0 || s <= 0) throw std::invalid_argument("shell_bound_report: inputs must be positive");
  BoundReport r{m, s, counts, mpz_class(1), false, std::nullopt};
  mpz_class best = 0;
  for (const auto& c : counts) {
    if (c <= 0) throw std::invalid_argument("shell_bound_report: shell counts must be positive");
    r.product *= c;
    best = std::max(best, c);
  }
  r.feasible = s <= r.product;
  if (s == 1) {
    r.min_k = 0;
  } else if (best > 1) {
    std::size_t k = 0;
    mpz_class p = 1;
    while (p < s) {
      p *= best;
      ++k;
    }
    r.min_k = k;
  }
  return r;
}

inline nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& c : r.shell_counts) counts.push_back(c.get_str());
  nlohmann::json j = {{"ground_size", r.ground_size}, {"family_size", r.family_size.get_str()},
                      {"shell_counts", std::move(counts)}, {"product", r.product.get_str()},
                      {"feasible", r.feasible}};
  j["min_k"] = r.min_k ? nlohmann::json(*r.min_k) : nlohmann::json(nullptr);
  return j;
}

}  // namespace pcglab
