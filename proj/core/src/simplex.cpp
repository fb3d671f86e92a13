#include "boxworld/simplex.hpp"

#include "boxworld/error.hpp"

namespace boxworld {

namespace {

class Tableau {
 public:
  // Columns: [0, n) originals, [n, n+m) artificials, n+m the right-hand side.
  Tableau(const LinearProgram& lp, std::vector<bool>& flipped) : m_(lp.a.size()), n_(lp.variables) {
    rows_.assign(m_, RVector(n_ + m_ + 1));
    basis_.resize(m_);
    flipped.assign(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.a[i].size() != n_) throw ShapeError("LP row " + std::to_string(i) + " has wrong length");
      const bool flip = lp.b[i] < 0;
      flipped[i] = flip;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][n_ + m_] = flip ? Rational(-lp.b[i]) : lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  std::size_t rows() const { return m_; }
  std::size_t originals() const { return n_; }
  std::size_t rhs_col() const { return n_ + m_; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& v : rows_[r]) {
      if (v != 0) v *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t k = 0; k <= rhs_col(); ++k) {
        if (rows_[r][k] != 0) rows_[i][k] -= f * rows_[r][k];
      }
    }
    basis_[r] = c;
    ++pivots_;
  }

  /// Reduced costs d_j = cost_j - cost_B B^{-1} A_j for every column.
  RVector reduced_costs(const RVector& cost) const {
    RVector d(cost);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < rhs_col(); ++j) {
        if (rows_[i][j] != 0) d[j] -= cb * rows_[i][j];
      }
    }
    return d;
  }

  /// Minimizes cost over columns allowed by `enterable`; false when unbounded.
  bool optimize(const RVector& cost, const std::vector<bool>& enterable) {
    while (true) {
      const RVector d = reduced_costs(cost);
      std::size_t enter = rhs_col();
      for (std::size_t j = 0; j < rhs_col(); ++j) {
        if (enterable[j] && d[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == rhs_col()) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][rhs_col()] / rows_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void deactivate(std::size_t r) { active_[r] = false; }
  bool active(std::size_t r) const { return active_[r]; }
  std::size_t pivot_count() const { return pivots_; }
  void init_active() { active_.assign(m_, true); }

 private:
  std::size_t m_, n_;
  RMatrix rows_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  if (lp.b.size() != lp.a.size()) throw ShapeError("LP right-hand side length mismatch");
  if (!lp.c.empty() && lp.c.size() != lp.variables) throw ShapeError("LP objective length mismatch");
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.variables;

  std::vector<bool> flipped;
  Tableau t(lp, flipped);
  t.init_active();
  LpResult result;

  // Phase 1: minimize the sum of artificials.
  RVector phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  std::vector<bool> all(n + m, true);
  t.optimize(phase1, all);

  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basic(i) >= n) infeasibility += t.at(i, t.rhs_col());
  }
  if (infeasibility > 0) {
    // Phase-1 duals from the artificial reduced costs: y_i = 1 - d_{n+i}.
    const RVector d = t.reduced_costs(phase1);
    result.status = LpStatus::Infeasible;
    result.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rational y = 1 - d[n + i];
      if (!flipped[i]) y = -y;
      result.farkas[i] = y;
    }
    result.pivots = t.pivot_count();
    return result;
  }

  // Drive zero-level artificials out of the basis; rows that cannot be are redundant.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basic(i) < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.at(i, j) != 0) {
        col = j;
        break;
      }
    }
    if (col < n) {
      t.pivot(i, col);
    } else {
      t.deactivate(i);
    }
  }

  RVector cost(n + m);
  for (std::size_t j = 0; j < lp.c.size(); ++j) cost[j] = lp.c[j];
  std::vector<bool> originals(n + m, false);
  for (std::size_t j = 0; j < n; ++j) originals[j] = true;
  if (!lp.c.empty() && !t.optimize(cost, originals)) {
    result.status = LpStatus::Unbounded;
    result.pivots = t.pivot_count();
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (t.active(i) && t.basic(i) < n) result.x[t.basic(i)] = t.at(i, t.rhs_col());
  }
  result.objective = 0;
  for (std::size_t j = 0; j < lp.c.size(); ++j) result.objective += lp.c[j] * result.x[j];
  result.pivots = t.pivot_count();
  return result;
}

bool verify_farkas(const LinearProgram& lp, const RVector& y) {
  if (y.size() != lp.a.size()) return false;
  Rational yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) yb += y[i] * lp.b[i];
  if (yb >= 0) return false;
  for (std::size_t j = 0; j < lp.variables; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * lp.a[i][j];
    if (s < 0) return false;
  }
  return true;
}

}  // namespace boxworld
