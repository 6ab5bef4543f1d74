#include "gtwidth/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "gtwidth/linalg.hpp"

namespace gtwidth {

namespace {

using Complex = std::complex<double>;

void dense_rows(const Polytope& p, RatMat& A, RatVec& b) {
  const auto& rows = p.inequalities();
  const int m = static_cast<int>(rows.size());
  A.setZero(m, p.dim());
  b.resize(m);
  for (int r = 0; r < m; ++r) {
    for (const auto& [idx, coeff] : rows[r].terms) A(r, idx) = coeff;
    b(r) = rows[r].rhs;
  }
}

LPResult finish_lp(const Polytope& p, LpSolution<Rational> s) {
  if (s.status == LpStatus::Infeasible)
    throw ConstructionError("LP over the orbit polytope reported infeasible");
  if (s.status == LpStatus::Unbounded)
    throw ConstructionError("LP over the orbit polytope reported unbounded");
  if (!p.contains(s.x)) throw ConstructionError("LP witness violates a constraint");
  return {s.status, std::move(s.value), std::move(s.x)};
}

}  // namespace

LPResult lp_optimize(const Polytope& p, const RatVec& objective, bool maximize) {
  RatMat A;
  RatVec b;
  dense_rows(p, A, b);
  return finish_lp(p, solve_lp<Rational>(A, b, objective, maximize));
}

LPResult lp_optimize_face(const Polytope& p, const RatVec& objective, bool maximize,
                          const std::vector<int>& active_rows) {
  RatMat A;
  RatVec b;
  dense_rows(p, A, b);
  return finish_lp(p, solve_lp<Rational>(A, b, objective, maximize, active_rows));
}

EdgeCheck verify_edge(const Polytope& p, const EdgeData& e, const RatVec& V) {
  const int N = p.dim();
  EdgeCheck out;
  RatVec other = V;
  for (int i = 0; i < N; ++i)
    if (e.direction(i) != 0) other(i) += e.length * Rational(e.direction(i));
  if (!p.contains(V) || !p.contains(other)) {
    out.detail = "an endpoint of the edge lies outside the polytope";
    return out;
  }

  const auto& rows = p.inequalities();
  std::vector<int> active;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    if (rows[r].slack_at(V) == 0 && rows[r].slack_at(other) == 0) active.push_back(r);
  RatMat normals(active.size(), N);
  normals.setZero();
  for (std::size_t i = 0; i < active.size(); ++i)
    for (const auto& [idx, coeff] : rows[active[i]].terms) normals(i, idx) = coeff;
  out.active_rank = exact_rank(normals);
  if (out.active_rank != N - 1) {
    out.detail = "active constraints have rank " + std::to_string(out.active_rank) +
                 ", expected " + std::to_string(N - 1);
    return out;
  }

  RatVec obj = RatVec::Zero(N);
  obj(p.diagram().basis_index(e.box)) = 1;
  out.lp_lo = lp_optimize_face(p, obj, /*maximize=*/false, active).value;
  out.lp_hi = lp_optimize_face(p, obj, /*maximize=*/true, active).value;
  if (out.lp_lo != e.lo || out.lp_hi != e.hi) {
    out.detail = "face interval [" + rational_str(out.lp_lo) + ", " +
                 rational_str(out.lp_hi) + "] does not match the claimed [" +
                 rational_str(e.lo) + ", " + rational_str(e.hi) + "]";
    return out;
  }
  out.ok = true;
  return out;
}

bool verify_vertex(const Polytope& p, const RatVec& V) {
  if (!p.contains(V)) return false;
  const int N = p.dim();
  const auto& rows = p.inequalities();
  std::vector<int> active;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    if (rows[r].slack_at(V) == 0) active.push_back(r);
  RatMat normals(active.size(), N);
  normals.setZero();
  for (std::size_t i = 0; i < active.size(); ++i)
    for (const auto& [idx, coeff] : rows[active[i]].terms) normals(i, idx) = coeff;
  return exact_rank(normals) == N;
}

namespace {

RatMat model_matrix_so_exact(const Weight& w) {
  const int m = w.group.ambient_size();
  RatMat A = RatMat::Zero(m, m);
  for (int i = 1; i <= w.n(); ++i) {
    A(2 * i - 2, 2 * i - 1) = -w.at(i);
    A(2 * i - 1, 2 * i - 2) = w.at(i);
  }
  return A;
}

}  // namespace

int centralizer_dim(const Weight& w) {
  if (!w.group.is_orthogonal()) {
    // The centralizer of a real diagonal matrix in u(n): one real dimension
    // per diagonal entry, two per equal off-diagonal pair.
    const int n = w.n();
    int d = n;
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (w.at(j) == w.at(k)) d += 2;
    return d;
  }
  const int m = w.group.ambient_size();
  const RatMat A = model_matrix_so_exact(w);
  const int D = m * (m - 1) / 2;
  std::vector<std::pair<int, int>> basis;
  basis.reserve(D);
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) basis.emplace_back(p, q);
  RatMat ad = RatMat::Zero(D, D);
  for (int col = 0; col < D; ++col) {
    const auto [p, q] = basis[col];
    RatMat B = RatMat::Zero(m, m);
    B(p, q) = 1;
    B(q, p) = -1;
    RatMat C = B * A - A * B;  // skew again
    for (int row = 0; row < D; ++row) ad(row, col) = C(basis[row].first, basis[row].second);
  }
  return D - exact_rank(ad);
}

Eigen::MatrixXcd model_matrix_u(const Weight& w) {
  const int n = w.n();
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i <= n; ++i) A(i - 1, i - 1) = to_double(w.at(i));
  return A;
}

Eigen::MatrixXcd vertex_matrix_u(const Weight& w) {
  const int n = w.n();
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i <= n; ++i) A(i - 1, i - 1) = to_double(w.at(n - i + 1));
  return A;
}

Eigen::MatrixXd model_matrix_so(const Weight& w) {
  const int m = w.group.ambient_size();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  for (int i = 1; i <= w.n(); ++i) {
    const double a = to_double(w.at(i));
    A(2 * i - 2, 2 * i - 1) = -a;
    A(2 * i - 1, 2 * i - 2) = a;
  }
  return A;
}

Eigen::MatrixXcd orbit_point_u(const Weight& w, const Eigen::MatrixXcd& Q) {
  Eigen::MatrixXcd A = Q * model_matrix_u(w) * Q.adjoint();
  return (A + A.adjoint()) / 2.0;  // strip numerical asymmetry
}

Eigen::MatrixXd orbit_point_so(const Weight& w, const Eigen::MatrixXd& Q) {
  Eigen::MatrixXd A = Q * model_matrix_so(w) * Q.transpose();
  return (A - A.transpose()) / 2.0;
}

Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd Z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
  Eigen::MatrixXcd Q = qr.householderQ();
  const Eigen::MatrixXcd& R = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const Complex r = R(i, i);
    Q.col(i) *= (std::abs(r) == 0.0) ? Complex(1, 0) : r / std::abs(r);
  }
  return Q;
}

Eigen::MatrixXd haar_special_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd Z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Z(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Z);
  Eigen::MatrixXd Q = qr.householderQ();
  const Eigen::MatrixXd& R = qr.matrixQR();
  for (int i = 0; i < n; ++i)
    if (R(i, i) < 0) Q.col(i) *= -1.0;
  if (Q.determinant() < 0) Q.col(0) *= -1.0;  // O(n) Haar -> SO(n) Haar
  return Q;
}

Eigen::MatrixXcd sample_orbit_point_u(const Weight& w, std::mt19937_64& rng) {
  return orbit_point_u(w, haar_unitary(w.n(), rng));
}

Eigen::MatrixXd sample_orbit_point_so(const Weight& w, std::mt19937_64& rng) {
  return orbit_point_so(w, haar_special_orthogonal(w.group.ambient_size(), rng));
}

namespace {

struct SlotSink {
  const Diagram& d;
  Eigen::VectorXd values;
  double max_dev = 0.0;
  double tol;

  SlotSink(const Diagram& dd, double t)
      : d(dd), values(Eigen::VectorXd::Zero(dd.size())), tol(t) {}

  void put(int j, int k, double v) {
    if (d.is_box({j, k})) {
      values(d.basis_index({j, k})) = v;
      return;
    }
    const double expected = to_double(d.constant_value(j, k));
    const double dev = std::abs(v - expected);
    max_dev = std::max(max_dev, dev);
    if (dev > tol)
      throw ConstantMismatchError(
          "constant Gelfand-Tsetlin function at (" + std::to_string(j) + "," +
          std::to_string(k) + ") sampled " + std::to_string(v) + ", expected " +
          std::to_string(expected));
  }
};

}  // namespace

GtValues gt_values_u(const Diagram& d, const Eigen::MatrixXcd& A, double tol) {
  const int n = d.weight().n();
  if (A.rows() != n || A.cols() != n)
    throw std::invalid_argument("orbit point has the wrong shape");
  SlotSink sink(d, tol);
  for (int level = 1; level < n; ++level) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.topLeftCorner(level, level));
    const Eigen::VectorXd ev = es.eigenvalues();  // ascending
    for (int i = 1; i <= level; ++i) {
      // Slot (level, i) is box (i, level - i + 1); i-th largest eigenvalue.
      sink.put(i, level - i + 1, ev(level - i));
    }
  }
  return {std::move(sink.values), sink.max_dev};
}

GtValues gt_values_so(const Diagram& d, const Eigen::MatrixXd& A, double tol) {
  const int m0 = d.group().ambient_size();
  const int n = d.weight().n();
  const bool odd = d.group().family == GroupFamily::OddOrthogonal;
  if (A.rows() != m0 || A.cols() != m0)
    throw std::invalid_argument("orbit point has the wrong shape");
  SlotSink sink(d, tol);
  for (int level = 2; level < m0; ++level) {
    const Eigen::MatrixXd sub = A.topLeftCorner(level, level);
    const Eigen::MatrixXcd H = Complex(0, 1) * sub.cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    const Eigen::VectorXd mu = es.eigenvalues();  // symmetric spectrum, ascending
    const int p = level / 2;
    for (int i = 1; i <= p; ++i) {
      double v = mu(level - i);  // i-th largest; nonnegative up to noise
      if (level % 2 == 0 && i == p) {
        // Chamber value of the last even-level function carries the sign
        // of the Pfaffian; the (-1)^p factor is the Pfaffian of the model
        // block matrix with unit entries.
        const double pf = pfaffian(sub);
        const double sgn = (pf > 0 ? 1.0 : (pf < 0 ? -1.0 : 0.0)) * (p % 2 == 0 ? 1.0 : -1.0);
        if (sgn != 0.0) v = std::abs(v) * sgn;
      }
      const int k = odd ? level - n - i : level - n - i + 1;
      sink.put(i, k, v);
    }
  }
  return {std::move(sink.values), sink.max_dev};
}

SampleReport montecarlo_membership(const Polytope& p, int n_samples, double tolerance,
                                   std::uint64_t seed) {
  SampleReport rep;
  rep.samples = n_samples;
  rep.seed = seed;
  rep.tolerance = tolerance;
  rep.max_violation = 0.0;

  const Diagram& d = p.diagram();
  const Weight& w = d.weight();
  const bool ortho = w.group.is_orthogonal();

  // Double image of the exact rows, evaluated per sample.
  struct Row {
    std::vector<std::pair<int, double>> terms;
    double rhs;
  };
  std::vector<Row> rows;
  for (const auto& r : p.inequalities()) {
    Row row;
    row.rhs = to_double(r.rhs);
    for (const auto& [idx, c] : r.terms) row.terms.emplace_back(idx, to_double(c));
    rows.push_back(std::move(row));
  }

  std::mt19937_64 rng(seed);
  double min_slack = std::numeric_limits<double>::infinity();
  for (int s = 0; s < n_samples; ++s) {
    GtValues gt;
    try {
      gt = ortho ? gt_values_so(d, sample_orbit_point_so(w, rng), tolerance)
                 : gt_values_u(d, sample_orbit_point_u(w, rng), tolerance);
    } catch (const ConstantMismatchError& err) {
      rep.pass = false;
      rep.note = err.what();
      rep.max_violation = std::min(min_slack, 0.0);  // keep the report finite
      return rep;
    }
    rep.max_constant_dev = std::max(rep.max_constant_dev, gt.max_constant_dev);
    for (const auto& row : rows) {
      double lhs = 0.0;
      for (const auto& [idx, c] : row.terms) lhs += c * gt.values(idx);
      min_slack = std::min(min_slack, row.rhs - lhs);
    }
  }
  if (n_samples == 0) min_slack = 0.0;
  rep.max_violation = min_slack;  // most negative slack; positive means headroom
  rep.pass = (min_slack >= -tolerance);
  return rep;
}

double psi_symplectic_max_deviation(int N, int n_points, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (0.95 - N * tol::kPsiMarginY < tol::kPsiMarginY)
    throw std::invalid_argument(
        "disc-map dimension too large for the sampling margins (max " +
        std::to_string(static_cast<int>(0.95 / tol::kPsiMarginY) - 1) + ")");
  const double pi = std::acos(-1.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  const int dim = 2 * N;
  Eigen::MatrixXd Omega = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < N; ++i) {
    Omega(2 * i, 2 * i + 1) = 1.0;
    Omega(2 * i + 1, 2 * i) = -1.0;
  }

  auto psi = [&](const Eigen::VectorXd& pt) {
    Eigen::VectorXd out(dim);
    for (int i = 0; i < N; ++i) {
      const double x = pt(2 * i), y = pt(2 * i + 1);
      if (!(x > 0.0 && x < pi && y > 0.0))
        throw std::domain_error("sample left the open domain of the disc map");
      out(2 * i) = std::sqrt(y) * std::cos(2 * x);
      out(2 * i + 1) = -std::sqrt(y) * std::sin(2 * x);
    }
    return out;
  };

  double worst = 0.0;
  const double h = tol::kPsiStep;
  for (int s = 0; s < n_points; ++s) {
    Eigen::VectorXd pt(dim);
    // x coordinates uniform inside the margin; y on a shrunken simplex,
    // each coordinate at least kPsiMarginY.
    std::vector<double> z(N);
    double zsum = 0.0;
    for (int i = 0; i < N; ++i) {
      z[i] = expo(rng);
      zsum += z[i];
    }
    const double budget = 0.95 - N * tol::kPsiMarginY;
    const double scale = budget * (0.3 + 0.7 * unif(rng));
    double ysum = 0.0;
    for (int i = 0; i < N; ++i) {
      pt(2 * i) = tol::kPsiMarginX + (pi - 2 * tol::kPsiMarginX) * unif(rng);
      pt(2 * i + 1) = tol::kPsiMarginY + scale * z[i] / zsum;
      ysum += pt(2 * i + 1);
    }
    if (!(ysum < 1.0)) throw std::domain_error("simplex sample left the open domain");

    Eigen::MatrixXd J(dim, dim);
    for (int t = 0; t < dim; ++t) {
      Eigen::VectorXd fwd = pt, bwd = pt;
      fwd(t) += h;
      bwd(t) -= h;
      J.col(t) = (psi(fwd) - psi(bwd)) / (2 * h);
    }
    const double dev = (J.transpose() * Omega * J - Omega).cwiseAbs().maxCoeff();
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace gtwidth
