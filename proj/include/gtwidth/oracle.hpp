#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gtwidth/polytope.hpp"
#include "gtwidth/simplex_lp.hpp"
#include "gtwidth/tolerances.hpp"

namespace gtwidth {

struct LPResult {
  LpStatus status;
  Rational value;
  RatVec witness;
};

/// Exact optimum of a linear objective over the closed polytope.
/// Infeasibility can only mean a construction bug and throws.
LPResult lp_optimize(const Polytope& p, const RatVec& objective, bool maximize);

/// Same, restricted to the face where the listed inequality rows are tight.
LPResult lp_optimize_face(const Polytope& p, const RatVec& objective, bool maximize,
                          const std::vector<int>& active_rows);

struct EdgeCheck {
  bool ok = false;
  int active_rank = -1;
  Rational lp_lo, lp_hi;
  std::string detail;
};

/// Confirms that the claimed edge really is a 1-dimensional face of P with
/// exactly the claimed interval: both endpoints lie in P, the constraints
/// tight along the segment have rank N-1, and the LP range of the free
/// coordinate over that face reproduces [lo, hi] exactly.
EdgeCheck verify_edge(const Polytope& p, const EdgeData& e, const RatVec& V);

/// V is a vertex: the inequalities active at V have rank N.
bool verify_vertex(const Polytope& p, const RatVec& V);

/// dim of the centralizer of the weight's model matrix inside the group's
/// Lie algebra, by exact rank of ad_A. Independent route to stabilizer_dim.
int centralizer_dim(const Weight& w);

// --- orbit sampling ----------------------------------------------------

/// Model matrix the weight itself maps to: diag(l1..ln) for U(n), the
/// block matrix diag(L(l1),...,L(ln)[,0]) for SO(m).
Eigen::MatrixXcd model_matrix_u(const Weight& w);
Eigen::MatrixXd model_matrix_so(const Weight& w);
/// The matrix whose Gelfand-Tsetlin values realize the vertex V for U(n):
/// diag(ln, ..., l1).
Eigen::MatrixXcd vertex_matrix_u(const Weight& w);

/// Conjugates of the model matrix by a given group element.
Eigen::MatrixXcd orbit_point_u(const Weight& w, const Eigen::MatrixXcd& Q);
Eigen::MatrixXd orbit_point_so(const Weight& w, const Eigen::MatrixXd& Q);

/// Haar-distributed group elements: QR of a Gaussian matrix with the
/// R-diagonal phase (resp. sign and determinant) correction.
Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng);
Eigen::MatrixXd haar_special_orthogonal(int n, std::mt19937_64& rng);

/// A random point of the orbit, as a matrix (Hermitian / skew-symmetric).
Eigen::MatrixXcd sample_orbit_point_u(const Weight& w, std::mt19937_64& rng);
Eigen::MatrixXd sample_orbit_point_so(const Weight& w, std::mt19937_64& rng);

struct GtValues {
  Eigen::VectorXd values;      // over boxes, basis order
  double max_constant_dev;     // worst |observed - expected| over constant slots
};

/// Gelfand-Tsetlin values of an orbit point, mapped onto the diagram's
/// boxes. Values of constant functions are checked against their known
/// constants and discarded; a deviation beyond tol throws
/// ConstantMismatchError. Throws std::invalid_argument on shape mismatch.
GtValues gt_values_u(const Diagram& d, const Eigen::MatrixXcd& A,
                     double tol = tol::kConstantCheck);
GtValues gt_values_so(const Diagram& d, const Eigen::MatrixXd& A,
                      double tol = tol::kConstantCheck);

struct SampleReport {
  int samples = 0;
  double max_violation = 0.0;     // most negative inequality slack observed
  double max_constant_dev = 0.0;  // worst constant-function deviation
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// Draws orbit points, evaluates every polytope inequality on their
/// Gelfand-Tsetlin values and reports the worst violation. Failures are
/// reported in the result, never thrown.
SampleReport montecarlo_membership(const Polytope& p, int n_samples, double tolerance,
                                   std::uint64_t seed);

/// Max infinity-norm deviation of J^T O J from O for the numerically
/// differentiated square-times-simplex -> ball map, sampled away from the
/// sqrt singularity. Throws std::domain_error if a sample point leaves the
/// open domain.
double psi_symplectic_max_deviation(int N, int n_points, std::uint64_t seed);

}  // namespace gtwidth
