#include "kostka/lp.hpp"

#include <stdexcept>

namespace kostka {

namespace {

// Full-tableau simplex. Variables are x = u - w (u, w >= 0) plus one slack
// per inequality and one artificial per row; Bland's rule throughout.
class Tableau {
 public:
  Tableau(const Mat& ge_a, const Vec& ge_b, const Mat& eq_a, const Vec& eq_b, int nvars)
      : n_(nvars),
        m_ge_(static_cast<int>(ge_a.size())),
        m_(static_cast<int>(ge_a.size() + eq_a.size())) {
    ncols_ = 2 * n_ + m_ge_ + m_;  // u, w, slacks, artificials
    rows_.assign(m_, Vec(ncols_ + 1, Rat(0)));
    basis_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      const bool is_ge = i < m_ge_;
      const Vec& a = is_ge ? ge_a[i] : eq_a[i - m_ge_];
      Rat b = is_ge ? ge_b[i] : eq_b[i - m_ge_];
      Vec& row = rows_[i];
      for (int j = 0; j < n_; ++j) {
        row[j] = a[j];
        row[n_ + j] = -a[j];
      }
      if (is_ge) row[2 * n_ + i] = -1;  // a.x - s = b
      row[ncols_] = b;
      if (b < 0)
        for (auto& v : row) v = -v;
      row[2 * n_ + m_ge_ + i] = 1;
      basis_[i] = 2 * n_ + m_ge_ + i;
    }
  }

  // Phase 1: maximize -(sum of artificials). Returns true when feasible.
  bool phase1() {
    Vec z(ncols_ + 1, Rat(0));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j <= ncols_; ++j) z[j] += rows_[i][j];
    // z_j now equals the reduced cost of column j for the phase-1 objective
    // on the non-artificial columns; artificials never re-enter.
    if (!run(z, 2 * n_ + m_ge_))
      throw std::logic_error("phase-1 objective cannot be unbounded");
    Rat resid = 0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= 2 * n_ + m_ge_) resid += rows_[i][ncols_];
    if (resid != 0) return false;
    // Pivot basic artificials out; drop redundant rows.
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < 2 * n_ + m_ge_) continue;
      int col = -1;
      for (int j = 0; j < 2 * n_ + m_ge_; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) pivot(i, col);
    }
    int keep = 0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= 2 * n_ + m_ge_) continue;  // redundant constraint
      if (keep != i) {
        rows_[keep] = std::move(rows_[i]);
        basis_[keep] = basis_[i];
      }
      ++keep;
    }
    rows_.resize(keep);
    basis_.resize(keep);
    m_ = keep;
    return true;
  }

  // Phase 2: maximize objective (given on the x variables). Returns false on
  // unbounded.
  bool phase2(const Vec& objective) {
    Vec z(ncols_ + 1, Rat(0));
    for (int j = 0; j < n_; ++j) {
      z[j] = objective[j];
      z[n_ + j] = -objective[j];
    }
    for (int i = 0; i < m_; ++i) {
      int b = basis_[i];
      Rat cb = cost_of(objective, b);
      if (cb != 0)
        for (int j = 0; j <= ncols_; ++j) z[j] -= cb * rows_[i][j];
    }
    return run(z, 2 * n_ + m_ge_);
  }

  Vec solution() const {
    Vec x(n_, Rat(0));
    for (int i = 0; i < m_; ++i) {
      int b = basis_[i];
      if (b < n_)
        x[b] += rows_[i][ncols_];
      else if (b < 2 * n_)
        x[b - n_] -= rows_[i][ncols_];
    }
    return x;
  }

 private:
  static Rat cost_of_x(const Vec& objective, int var, int n) {
    if (var < n) return objective[var];
    if (var < 2 * n) return -objective[var - n];
    return 0;
  }
  Rat cost_of(const Vec& objective, int var) const { return cost_of_x(objective, var, n_); }

  void pivot(int row, int col) {
    Rat d = rows_[row][col];
    for (int j = 0; j <= ncols_; ++j) rows_[row][j] /= d;
    for (int i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      Rat f = rows_[i][col];
      for (int j = 0; j <= ncols_; ++j) rows_[i][j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  // Bland: entering = lowest reduced-cost-positive column <= col_limit,
  // leaving = lowest basic index among ratio-test minima. Updates z in place.
  // Returns false when unbounded.
  bool run(Vec& z, int col_limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < col_limit; ++j)
        if (z[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rows_[i][ncols_] / rows_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      if (z[enter] != 0) {
        Rat f = z[enter];
        for (int j = 0; j <= ncols_; ++j) z[j] -= f * rows_[leave][j];
      }
    }
  }

  int n_, m_ge_, m_, ncols_;
  Mat rows_;
  std::vector<int> basis_;
};

}  // namespace

LPResult solve_lp(const Mat& ge_a, const Vec& ge_b, const Mat& eq_a,
                  const Vec& eq_b, const Vec& objective) {
  const int n = static_cast<int>(objective.size());
  for (const auto& row : ge_a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("bad ge row size");
  for (const auto& row : eq_a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("bad eq row size");

  LPResult res;
  Tableau t(ge_a, ge_b, eq_a, eq_b, n);
  if (!t.phase1()) {
    res.status = LPResult::Status::Infeasible;
    return res;
  }
  if (!t.phase2(objective)) {
    res.status = LPResult::Status::Unbounded;
    res.x = t.solution();
    return res;
  }
  res.status = LPResult::Status::Optimal;
  res.x = t.solution();
  res.value = dot(objective, res.x);
  return res;
}

}  // namespace kostka
