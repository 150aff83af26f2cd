#pragma once

#include <algorithm>
#include <cctype>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rational.hpp"

namespace pcglab {

/// One interval of nonnegative reals with independently open/closed ends.
struct Interval {
  Rational lo;
  bool lo_closed = true;
  Rational hi;
  bool hi_closed = true;

  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), true, std::move(hi), true}; }

  bool contains(const Rational& d) const {
    if (lo_closed ? d < lo : d <= lo) return false;
    if (hi_closed ? d > hi : d >= hi) return false;
    return true;
  }

  bool is_empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of intervals, kept sorted, pairwise disjoint and merged.
class IntervalSet {
 public:
  IntervalSet() = default;

  explicit IntervalSet(std::vector<Interval> parts) {
    for (auto& p : parts) {
      p.lo.canonicalize();
      p.hi.canonicalize();
      if (p.lo < 0) throw std::invalid_argument("interval endpoints must be nonnegative");
      if (p.lo > p.hi) throw std::invalid_argument("interval has lo > hi");
      if (!p.is_empty()) parts_.push_back(std::move(p));
    }
    normalize();
  }

  static IntervalSet closed(Rational lo, Rational hi) { return IntervalSet({Interval::closed(std::move(lo), std::move(hi))}); }

  bool empty() const { return parts_.empty(); }
  std::size_t count() const { return parts_.size(); }
  const std::vector<Interval>& parts() const { return parts_; }

  bool contains(const Rational& d) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), d,
                               [](const Interval& iv, const Rational& x) { return iv.hi < x; });
    return it != parts_.end() && it->contains(d);
  }

  /// All finite endpoints, ascending, deduplicated.
  std::vector<Rational> endpoints() const {
    std::vector<Rational> out;
    for (const auto& p : parts_) {
      out.push_back(p.lo);
      out.push_back(p.hi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Rational max_endpoint() const { return parts_.empty() ? Rational(0) : parts_.back().hi; }

  /// Point-set containment: every point of *this lies in `other`.
  bool subset_of(const IntervalSet& other) const {
    for (const auto& p : parts_) {
      bool covered = false;
      for (const auto& q : other.parts_) {
        bool lo_ok = q.lo < p.lo || (q.lo == p.lo && (q.lo_closed || !p.lo_closed));
        bool hi_ok = p.hi < q.hi || (q.hi == p.hi && (q.hi_closed || !p.hi_closed));
        if (lo_ok && hi_ok) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  }

  /// Every endpoint multiplied by a positive factor.
  IntervalSet scaled(const Rational& factor) const {
    if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<Interval> out = parts_;
    for (auto& p : out) {
      p.lo *= factor;
      p.hi *= factor;
    }
    return IntervalSet(std::move(out));
  }

  /// "[3,7] U [25,25]"; the empty set prints as "{}".
  std::string to_string() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += " U ";
      const auto& p = parts_[i];
      out += p.lo_closed ? '[' : '(';
      out += format_rational(p.lo) + "," + format_rational(p.hi);
      out += p.hi_closed ? ']' : ')';
    }
    return out;
  }

  /// Accepts intervals like "[3,7]", "(3,7]" separated by whitespace, ',', 'U',
  /// 'u' or the union sign; "{}" or "" is the empty set.
  static IntervalSet parse(std::string_view text) {
    std::vector<Interval> parts;
    std::size_t i = 0;
    auto skip = [&] {
      for (;;) {
        if (i >= text.size()) return;
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c) || c == ',' || c == 'U' || c == 'u' || c == '{' || c == '}') {
          ++i;
        } else if (text.substr(i, 3) == "\xE2\x88\xAA") {  // ∪
          i += 3;
        } else {
          return;
        }
      }
    };
    for (;;) {
      skip();
      if (i >= text.size()) break;
      char open = text[i];
      if (open != '[' && open != '(') throw FormatError("interval: expected '[' or '(' in \"" + std::string(text) + "\"");
      auto close = text.find_first_of("])", i);
      if (close == std::string_view::npos) throw FormatError("interval: missing closing bracket");
      auto body = text.substr(i + 1, close - i - 1);
      auto comma = body.find(',');
      if (comma == std::string_view::npos) throw FormatError("interval: missing ','");
      Interval iv{parse_rational(body.substr(0, comma)), open == '[', parse_rational(body.substr(comma + 1)),
                  text[close] == ']'};
      if (iv.lo < 0 || iv.lo > iv.hi) throw FormatError("interval: need 0 <= lo <= hi");
      parts.push_back(std::move(iv));
      i = close + 1;
    }
    return IntervalSet(std::move(parts));
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  void normalize() {
    std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.lo_closed && !b.lo_closed;
    });
    std::vector<Interval> merged;
    for (auto& p : parts_) {
      if (!merged.empty()) {
        auto& last = merged.back();
        bool touches = p.lo < last.hi || (p.lo == last.hi && (last.hi_closed || p.lo_closed));
        if (touches) {
          if (p.hi > last.hi) {
            last.hi = p.hi;
            last.hi_closed = p.hi_closed;
          } else if (p.hi == last.hi) {
            last.hi_closed = last.hi_closed || p.hi_closed;
          }
          continue;
        }
      }
      merged.push_back(std::move(p));
    }
    parts_ = std::move(merged);
  }

  std::vector<Interval> parts_;
};

inline nlohmann::json to_json(const IntervalSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : s.parts())
    out.push_back({{"lo", format_rational(p.lo)},
                   {"lo_closed", p.lo_closed},
                   {"hi", format_rational(p.hi)},
                   {"hi_closed", p.hi_closed}});
  return out;
}

inline IntervalSet intervals_from_json(const nlohmann::json& j) {
  if (j.is_string()) return IntervalSet::parse(j.get<std::string>());
  if (!j.is_array()) throw FormatError("intervals must be a string or an array");
  std::vector<Interval> parts;
  try {
    for (const auto& p : j) {
      auto rat = [](const nlohmann::json& v) {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
        throw FormatError("interval endpoint must be a \"p/q\" string or an integer");
      };
      Interval iv{rat(p.at("lo")), p.value("lo_closed", true), rat(p.at("hi")), p.value("hi_closed", true)};
      if (iv.lo < 0 || iv.lo > iv.hi) throw FormatError("interval: need 0 <= lo <= hi");
      parts.push_back(std::move(iv));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("intervals JSON: ") + ex.what());
  }
  return IntervalSet(std::move(parts));
}

/// Distances d >= 0 lying at or below an odd number of the ascending
/// thresholds, as an interval set: [0,t1] if q is odd, then every other
/// half-open slab (t_{i-1}, t_i] counted from the top.
inline IntervalSet glp_thresholds_to_intervals(std::span<const Rational> thresholds) {
  const std::size_t q = thresholds.size();
  if (q == 0) throw std::invalid_argument("need at least one threshold");
  if (thresholds[0] < 0) throw std::invalid_argument("thresholds must be nonnegative");
  for (std::size_t i = 1; i < q; ++i)
    if (!(thresholds[i - 1] < thresholds[i])) throw std::invalid_argument("thresholds must be strictly ascending");

  // Region [0,t1] is under all q thresholds; (t_{i-1}, t_i] is under q-i+1 of them.
  std::vector<Interval> parts;
  if (q % 2 == 1) parts.push_back(Interval::closed(Rational(0), thresholds[0]));
  for (std::size_t i = 1; i < q; ++i)
    if ((q - i) % 2 == 1) parts.push_back({thresholds[i - 1], false, thresholds[i], true});
  return IntervalSet(std::move(parts));
}

}  // namespace pcglab
