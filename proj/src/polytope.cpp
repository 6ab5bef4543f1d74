#include "gtwidth/polytope.hpp"

#include <algorithm>

#include "gtwidth/linalg.hpp"

namespace gtwidth {

Rational LinearInequality::lhs_at(const RatVec& x) const {
  Rational acc(0);
  for (const auto& [idx, coeff] : terms) acc += coeff * x(idx);
  return acc;
}

namespace {

/// A grid slot as seen by the inequality generator: either a box variable
/// or a substituted constant.
struct Slot {
  bool is_box = false;
  int index = -1;     // basis index when a box
  Rational constant;  // value otherwise
};

Slot slot_value(const Diagram& d, int j, int k) {
  if (d.is_box({j, k})) return {true, d.basis_index({j, k}), Rational(0)};
  return {false, -1, d.constant_value(j, k)};
}

/// upper >= lower, or upper >= |lower| when lower sits on the rim line.
void emit(std::vector<LinearInequality>& rows, const Slot& upper, const Slot& lower,
          bool lower_abs) {
  auto push = [&](const Slot& lo, const Rational& lo_sign) {
    if (!upper.is_box && !lo.is_box) {
      const Rational lhs = lo_sign * lo.constant - upper.constant;
      if (lhs > 0)
        throw ConstructionError("constant interlacing relation violated at build time");
      return;  // constant-true row, dropped
    }
    LinearInequality row;
    row.rhs = 0;
    if (lo.is_box)
      row.terms.emplace_back(lo.index, lo_sign);
    else
      row.rhs -= lo_sign * lo.constant;
    if (upper.is_box)
      row.terms.emplace_back(upper.index, Rational(-1));
    else
      row.rhs += upper.constant;
    std::sort(row.terms.begin(), row.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  };
  if (!lower_abs) {
    push(lower, Rational(1));
    return;
  }
  if (!lower.is_box) {
    Slot folded = lower;
    if (folded.constant < 0) folded.constant = -folded.constant;
    push(folded, Rational(1));
    return;
  }
  push(lower, Rational(1));
  push(lower, Rational(-1));
}

}  // namespace

Polytope Polytope::build(Diagram d) {
  Polytope p;
  const int n = d.weight().n();
  // Every interlacing relation pairs a slot with its top or right
  // neighbour; scanning all slots emits each relation exactly once.
  for (int j = 1; j <= n; ++j) {
    for (int k = d.k_min(j); j + k <= n + 1; ++k) {
      if (!d.slot_exists(j, k)) continue;
      const Slot here = slot_value(d, j, k);
      if (d.slot_exists(j, k + 1))
        emit(p.rows_, slot_value(d, j, k + 1), here, d.slot_is_rim(j, k));
      if (d.slot_exists(j + 1, k))
        emit(p.rows_, here, slot_value(d, j + 1, k), d.slot_is_rim(j + 1, k));
    }
  }
  p.diagram_ = std::move(d);
  return p;
}

bool Polytope::contains(const RatVec& x) const {
  if (x.size() != dim())
    throw std::invalid_argument("point dimension does not match the polytope");
  for (const auto& row : rows_)
    if (row.lhs_at(x) > row.rhs) return false;
  return true;
}

RatVec vertex_V(const Diagram& d) {
  RatVec v(d.size());
  const Weight& w = d.weight();
  const bool ortho = d.group().is_orthogonal();
  for (const auto& info : d.boxes()) {
    const int i = d.basis_index(info.box);
    v(i) = ortho ? w.at(info.box.j) : w.at(w.n() - info.box.k + 1);
  }
  return v;
}

namespace {

EdgeData edge_for_box_u(const Diagram& d, Box b) {
  const Weight& w = d.weight();
  const BlockStructure& blocks = d.blocks();
  const int n = w.n();
  const int g = d.g_of(b.k);  // block of the row's diagonal square
  EdgeData e;
  e.box = b;
  e.lo = blocks.values.at(g - 1);   // v_g (1-based block g)
  e.hi = blocks.values.at(g - 2);   // v_{g-1}; g >= 2 for any box row
  e.length = e.hi - e.lo;
  const int top_row = n - blocks.n_of(g - 1);
  for (const auto& info : d.boxes()) {
    if (info.box.j <= b.j && info.box.k >= b.k && info.box.k <= top_row)
      e.moved.push_back(info.box);
  }
  e.direction = Eigen::VectorXi::Zero(d.size());
  for (Box m : e.moved) e.direction(d.basis_index(m)) = 1;
  return e;
}

EdgeData edge_for_box_so(const Diagram& d, Box b) {
  const Weight& w = d.weight();
  const BlockStructure& blocks = d.blocks();
  const int n = w.n();
  const bool odd = d.group().family == GroupFamily::OddOrthogonal;
  const int B = d.g_of(b.j);          // block of the column
  const int nB = blocks.n_of(B);
  const int rim_row = odd ? b.j - n : b.j - n + 1;
  const int interior_top = odd ? nB - n : nB - n + 1;

  EdgeData e;
  e.box = b;
  e.hi = w.at(b.j);  // = v_B, the coordinate of V
  if (b.k == rim_row) {
    e.lo = -e.hi;
  } else if (b.k <= interior_top) {
    e.lo = 0;
  } else {
    // Bounded below by the pinned value of the next block's column,
    // through the rim relation, hence the absolute value.
    Rational next = blocks.values.at(B);  // v_{B+1}, 0-based access
    if (next < 0) next = -next;
    e.lo = next;
  }
  e.length = e.hi - e.lo;
  for (const auto& info : d.boxes()) {
    if (info.box.j >= b.j && info.box.j <= nB && info.box.k <= b.k)
      e.moved.push_back(info.box);
  }
  e.direction = Eigen::VectorXi::Zero(d.size());
  for (Box m : e.moved) e.direction(d.basis_index(m)) = -1;
  return e;
}

}  // namespace

std::vector<EdgeData> edges(const Diagram& d) {
  std::vector<EdgeData> out;
  out.reserve(d.size());
  const bool ortho = d.group().is_orthogonal();
  for (const auto& info : d.boxes()) {
    EdgeData e = ortho ? edge_for_box_so(d, info.box) : edge_for_box_u(d, info.box);
    if (!(e.length > 0))
      throw ConstructionError("edge with nonpositive lattice length");
    out.push_back(std::move(e));
  }
  return out;
}

UnimodularMatrix matrix_W(const Diagram& d) {
  const int N = d.size();
  IntMat W(N, N);
  W.setZero();
  const auto es = edges(d);
  for (const auto& e : es) {
    const int col = d.basis_index(e.box);
    for (int r = 0; r < N; ++r) W(r, col) = e.direction(r);
  }
  for (int c = 0; c < N; ++c) {
    if (W(c, c) != 1 && W(c, c) != -1)
      throw UnimodularityFailure("diagonal entry of W is not a unit");
    for (int r = 0; r < c; ++r)
      if (W(r, c) != 0) throw UnimodularityFailure("W is not lower triangular");
  }
  RatMat Wq = W.cast<Rational>();
  const Rational det = exact_det(Wq);
  if (det != 1 && det != -1)
    throw UnimodularityFailure("det W = " + rational_str(det));
  return {std::move(W), det == 1 ? 1 : -1};
}

std::vector<RatVec> simplex_R(const Diagram& d, const Rational& r_prime) {
  if (!(r_prime > 0)) throw ConstructionError("simplex scale must be positive");
  const RatVec V = vertex_V(d);
  std::vector<RatVec> verts;
  verts.push_back(V);
  for (const auto& e : edges(d)) {
    RatVec v = V;
    for (int i = 0; i < d.size(); ++i)
      if (e.direction(i) != 0) v(i) += r_prime * Rational(e.direction(i));
    verts.push_back(std::move(v));
  }
  return verts;
}

Certificate certificate(const Weight& w) {
  const Polytope p = hrep(w);
  const Diagram& d = p.diagram();
  const LowerBound lb = lower_bound(w);
  auto um = matrix_W(d);

  Certificate cert;
  cert.weight = w;
  cert.r_prime = lb.r_prime;
  cert.star = lb.star;
  cert.V = vertex_V(d);
  cert.W = std::move(um.W);
  cert.detW = um.det;
  cert.simplex_vertices = simplex_R(d, lb.r_prime);
  cert.contained = true;
  for (const auto& v : cert.simplex_vertices) {
    if (!p.contains(v)) {
      cert.contained = false;
      throw ContainmentFailure(
          "simplex vertex escapes the polytope for " + w.group.name() +
          "; this certificate construction is wrong.\n" + d.render_ascii());
    }
  }
  return cert;
}

}  // namespace gtwidth
