#pragma once

#include <Eigen/Core>
#include <span>
#include <stdexcept>
#include <vector>

namespace gtwidth {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar value{};
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;  // an optimal point, when Optimal
};

/// Dense two-phase simplex with Bland's rule over an exact field.
///
/// Solves max/min c.x subject to A x <= b with x unrestricted in sign;
/// rows listed in `equality_rows` are constrained to hold with equality.
/// Bland's rule pivots guarantee termination; performance is adequate for
/// the desk-scale systems this project produces.
template <class Scalar>
LpSolution<Scalar> solve_lp(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c, bool maximize,
    std::span<const int> equality_rows = {}) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int m = static_cast<int>(A.rows());
  const int d = static_cast<int>(A.cols());
  if (b.size() != m || c.size() != d)
    throw std::invalid_argument("solve_lp: inconsistent dimensions");

  std::vector<bool> is_eq(m, false);
  for (int r : equality_rows) is_eq.at(r) = true;

  // Free variables split as x = u - v. Column layout: u (d), v (d), one
  // slack per inequality row, one artificial per row that needs it.
  std::vector<int> slack_col(m, -1);
  int ncols = 2 * d;
  for (int r = 0; r < m; ++r)
    if (!is_eq[r]) slack_col[r] = ncols++;
  const int nstruct = ncols;

  Mat T(m, nstruct);
  T.setZero();
  Vec rhs(m);
  std::vector<int> basis(m, -1);
  std::vector<int> needs_artificial;
  for (int r = 0; r < m; ++r) {
    const Scalar sign = (b(r) < Scalar(0)) ? Scalar(-1) : Scalar(1);
    for (int j = 0; j < d; ++j) {
      T(r, j) = sign * A(r, j);
      T(r, d + j) = -sign * A(r, j);
    }
    rhs(r) = sign * b(r);
    if (slack_col[r] >= 0) {
      T(r, slack_col[r]) = sign;  // negated rows get a surplus column
      if (sign > 0)
        basis[r] = slack_col[r];
      else
        needs_artificial.push_back(r);
    } else {
      needs_artificial.push_back(r);
    }
  }

  const int nart = static_cast<int>(needs_artificial.size());
  Mat tab(m, nstruct + nart);
  tab.setZero();
  tab.leftCols(nstruct) = T;
  for (int i = 0; i < nart; ++i) {
    tab(needs_artificial[i], nstruct + i) = Scalar(1);
    basis[needs_artificial[i]] = nstruct + i;
  }
  const int total = nstruct + nart;

  Vec row_costs(total);  // current objective row (reduced costs), maximize form
  Scalar obj_shift(0);

  auto pivot = [&](int prow, int pcol) {
    const Scalar piv = tab(prow, pcol);
    tab.row(prow) /= piv;
    rhs(prow) /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == prow) continue;
      const Scalar f = tab(r, pcol);
      if (f == Scalar(0)) continue;
      tab.row(r) -= f * tab.row(prow);
      rhs(r) -= f * rhs(prow);
    }
    const Scalar fc = row_costs(pcol);
    if (fc != Scalar(0)) {
      row_costs -= fc * tab.row(prow).transpose();
      obj_shift += fc * rhs(prow);
    }
    basis[prow] = pcol;
  };

  auto run_simplex = [&](int active_cols) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < active_cols; ++j) {
        if (row_costs(j) > Scalar(0)) {
          enter = j;  // Bland: smallest eligible index
          break;
        }
      }
      if (enter < 0) return true;  // optimal
      int leave = -1;
      for (int r = 0; r < m; ++r) {
        if (tab(r, enter) <= Scalar(0)) continue;
        if (leave < 0) {
          leave = r;
          continue;
        }
        const Scalar lhs = rhs(r) * tab(leave, enter);
        const Scalar cur = rhs(leave) * tab(r, enter);
        if (lhs < cur || (lhs == cur && basis[r] < basis[leave])) leave = r;
      }
      if (leave < 0) return false;  // unbounded direction
      pivot(leave, enter);
    }
  };

  LpSolution<Scalar> sol;

  if (nart > 0) {
    // Phase 1: maximize -(sum of artificials).
    row_costs.setZero();
    obj_shift = Scalar(0);
    for (int i = 0; i < nart; ++i) row_costs(nstruct + i) = Scalar(-1);
    // Express in terms of the current (artificial) basis.
    for (int i = 0; i < nart; ++i) {
      const int r = needs_artificial[i];
      row_costs += tab.row(r).transpose();
      obj_shift -= rhs(r);
    }
    if (!run_simplex(total))
      throw std::logic_error("phase-1 objective cannot be unbounded");
    if (obj_shift != Scalar(0)) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Drive any degenerate artificial out of the basis.
    for (int r = 0; r < m; ++r) {
      if (basis[r] < nstruct) continue;
      int col = -1;
      for (int j = 0; j < nstruct; ++j)
        if (tab(r, j) != Scalar(0)) {
          col = j;
          break;
        }
      if (col >= 0) pivot(r, col);
      // A fully zero structural row is redundant; its artificial stays
      // basic at level zero and never re-enters (cost stays nonpositive).
    }
  }

  // Phase 2.
  row_costs.setZero();
  obj_shift = Scalar(0);
  const Scalar dir = maximize ? Scalar(1) : Scalar(-1);
  for (int j = 0; j < d; ++j) {
    row_costs(j) = dir * c(j);
    row_costs(d + j) = -dir * c(j);
  }
  for (int i = 0; i < nart; ++i) row_costs(nstruct + i) = Scalar(0);
  // Reduce against the current basis.
  for (int r = 0; r < m; ++r) {
    const Scalar f = row_costs(basis[r]);
    if (f == Scalar(0)) continue;
    row_costs -= f * tab.row(r).transpose();
    obj_shift += f * rhs(r);
  }
  if (!run_simplex(nstruct)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  Vec x = Vec::Zero(d);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < d)
      x(basis[r]) += rhs(r);
    else if (basis[r] < 2 * d)
      x(basis[r] - d) -= rhs(r);
  }
  sol.status = LpStatus::Optimal;
  sol.x = std::move(x);
  sol.value = dir * obj_shift;
  return sol;
}

}  // namespace gtwidth
