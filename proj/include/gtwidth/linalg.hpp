#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdlib>

namespace gtwidth {

/// Rank over an exact field by plain Gaussian elimination (any nonzero
/// pivot is exact; no magnitude pivoting needed).
template <class Derived>
int exact_rank(const Eigen::MatrixBase<Derived>& m_in) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = m_in;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (m(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col) / m(row, col);
      m.row(r) -= f * m.row(row);
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Determinant over an exact field, elimination with row swaps.
template <class Derived>
typename Derived::Scalar exact_det(const Eigen::MatrixBase<Derived>& m_in) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = m_in;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (m(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col) / m(col, col);
      m.row(r) -= f * m.row(col);
    }
  }
  return det;
}

/// Pfaffian of a skew-symmetric matrix, Parlett-Reid elimination with
/// partial pivoting. For floating scalars only the sign is trustworthy
/// near cancellation, which is all the callers consume.
template <class Derived>
typename Derived::Scalar pfaffian(const Eigen::MatrixBase<Derived>& a_in) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = a_in;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("pfaffian of non-square matrix");
  if (n % 2 == 1) return Scalar(0);
  Scalar pf(1);
  using std::abs;  // ADL picks the multiprecision overload for exact scalars
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = k + 1;
    for (Eigen::Index i = k + 2; i < n; ++i)
      if (abs(a(i, k)) > abs(a(kp, k))) kp = i;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == Scalar(0)) return Scalar(0);
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index rest = n - k - 2;
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1> tau =
          a.row(k).segment(k + 2, rest).transpose() / a(k, k + 1);
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1> col =
          a.col(k + 1).segment(k + 2, rest);
      a.block(k + 2, k + 2, rest, rest) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

}  // namespace gtwidth
