#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace pcglab::lp {

/// sum(coef * x[var]) <= rhs
struct Constraint {
  std::vector<std::pair<std::size_t, Rational>> terms;
  Rational rhs;
};

/// Exact phase-one simplex over the rationals.
///
/// Decides whether {x >= 0 : every constraint holds} is non-empty and, if so,
/// returns a vertex of it. Bland's rule throughout, so the method terminates
/// on degenerate systems.
class FeasibilitySolver {
 public:
  explicit FeasibilitySolver(std::size_t num_vars) : num_vars_(num_vars) {}

  std::optional<std::vector<Rational>> solve(const std::vector<Constraint>& constraints) {
    const std::size_t rows = constraints.size();
    const std::size_t cols = num_vars_ + rows;  // structural + slack; rhs stored separately
    const std::size_t artificial_base = cols;

    tab_.assign(rows, std::vector<Rational>(cols));
    rhs_.assign(rows, Rational(0));
    basis_.assign(rows, 0);

    std::vector<Rational> obj(cols);
    Rational obj_rhs = 0;

    for (std::size_t i = 0; i < rows; ++i) {
      auto& row = tab_[i];
      for (const auto& [var, coef] : constraints[i].terms) {
        if (var >= num_vars_) throw std::out_of_range("lp: variable index out of range");
        row[var] += coef;
      }
      row[num_vars_ + i] = 1;
      rhs_[i] = constraints[i].rhs;
      if (rhs_[i] >= 0) {
        basis_[i] = num_vars_ + i;
      } else {
        for (auto& v : row) v = -v;
        rhs_[i] = -rhs_[i];
        basis_[i] = artificial_base + i;
        for (std::size_t j = 0; j < cols; ++j) obj[j] += row[j];
        obj_rhs += rhs_[i];
      }
    }

    while (obj_rhs > 0) {
      ++pivots_;
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(obj[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == cols) return std::nullopt;

      std::size_t leave = rows;
      Rational best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (sgn(tab_[i][enter]) <= 0) continue;
        Rational ratio = rhs_[i] / tab_[i][enter];
        if (leave == rows || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows) return std::nullopt;  // unbounded direction; cannot happen for phase one

      pivot(leave, enter);
      Rational factor = obj[enter];
      if (sgn(factor) != 0) {
        const auto& prow = tab_[leave];
        for (std::size_t j = 0; j < cols; ++j)
          if (sgn(prow[j]) != 0) obj[j] -= factor * prow[j];
        obj_rhs -= factor * rhs_[leave];
      }
    }

    std::vector<Rational> x(num_vars_);
    for (std::size_t i = 0; i < rows; ++i)
      if (basis_[i] < num_vars_) x[basis_[i]] = rhs_[i];
    return x;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  void pivot(std::size_t leave, std::size_t enter) {
    auto& prow = tab_[leave];
    Rational inv = 1 / prow[enter];
    for (auto& v : prow)
      if (sgn(v) != 0) v *= inv;
    rhs_[leave] *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < prow.size(); ++j)
      if (sgn(prow[j]) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == leave || sgn(tab_[i][enter]) == 0) continue;
      Rational factor = tab_[i][enter];
      for (auto j : nz) tab_[i][j] -= factor * prow[j];
      rhs_[i] -= factor * rhs_[leave];
    }
    basis_[leave] = enter;
  }

  std::size_t num_vars_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

/// Checks a point against the system exactly.
inline bool satisfies(const std::vector<Constraint>& constraints, const std::vector<Rational>& x) {
  for (auto& v : x)
    if (v < 0) return false;
  for (const auto& c : constraints) {
    Rational lhs = 0;
    for (const auto& [var, coef] : c.terms) lhs += coef * x[var];
    if (lhs > c.rhs) return false;
  }
  return true;
}

}  // namespace pcglab::lp
