#pragma once

#include <vector>

#include "gtwidth/diagram.hpp"

namespace gtwidth {

/// sum(coeff_i * x_i) <= rhs over box coordinates (basis order indices).
struct LinearInequality {
  std::vector<std::pair<int, Rational>> terms;  // sorted by index
  Rational rhs;

  Rational lhs_at(const RatVec& x) const;
  Rational slack_at(const RatVec& x) const { return rhs - lhs_at(x); }
};

/// Closed H-representation of the Gelfand-Tsetlin polytope over the
/// diagram's box coordinates, constants substituted, absolute-value
/// relations expanded into linear pairs.
class Polytope {
 public:
  static Polytope build(Diagram d);

  const Diagram& diagram() const { return diagram_; }
  int dim() const { return diagram_.size(); }
  const std::vector<LinearInequality>& inequalities() const { return rows_; }

  bool contains(const RatVec& x) const;

 private:
  Diagram diagram_;
  std::vector<LinearInequality> rows_;
};

/// Convenience composition: diagram plus H-representation in one step.
inline Polytope hrep(const Weight& w) { return Polytope::build(Diagram::build(w)); }

/// The distinguished vertex: every coordinate at its forced extremum
/// (lower bound for U(n), upper bound for the orthogonal families).
RatVec vertex_V(const Diagram& d);

/// One edge of the polytope per box: the free coordinate's interval, the
/// primitive direction out of V, and the set of coordinates it drags along.
struct EdgeData {
  Box box;
  Eigen::VectorXi direction;  // primitive, support = moved boxes
  Rational length;            // hi - lo, the lattice length
  std::vector<Box> moved;
  Rational lo, hi;            // interval of the free coordinate
};

std::vector<EdgeData> edges(const Diagram& d);

struct UnimodularMatrix {
  IntMat W;  // columns are edge directions, basis order
  int det;   // +1 or -1
};

/// Throws UnimodularityFailure unless det is +-1 and W is lower triangular
/// with a +-1 diagonal.
UnimodularMatrix matrix_W(const Diagram& d);

/// Vertices V and V + r' * w_b, one per box: N+1 points.
std::vector<RatVec> simplex_R(const Diagram& d, const Rational& r_prime);

struct Certificate {
  Weight weight;
  Rational r_prime;
  bool star;
  RatVec V;
  IntMat W;
  int detW;
  std::vector<RatVec> simplex_vertices;
  bool contained;
};

/// Assembles the full width certificate and checks it: the simplex misses
/// the polytope or W fails unimodularity only under a construction bug, so
/// both conditions throw rather than return a bad certificate.
Certificate certificate(const Weight& w);

}  // namespace gtwidth
