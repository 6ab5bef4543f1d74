#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtwidth/errors.hpp"
#include "gtwidth/rational.hpp"

namespace gtwidth {

enum class GroupFamily { UnitaryU, OddOrthogonal, EvenOrthogonal };

/// One of U(n), SO(2n+1), SO(2n); n is the rank.
struct GroupSpec {
  GroupFamily family;
  int n;

  bool is_orthogonal() const { return family != GroupFamily::UnitaryU; }
  /// Matrix size of the defining representation (n, 2n+1 or 2n).
  int ambient_size() const;
  /// dim_R of the group.
  int dim() const;
  std::string name() const;
};

/// A point of the positive Weyl chamber, exact rational entries.
///
/// Chamber conventions:
///   U(n):      l1 >= l2 >= ... >= ln
///   SO(2n+1):  l1 >= ... >= ln >= 0
///   SO(2n):    l1 >= ... >= l(n-1) >= |ln|
struct Weight {
  GroupSpec group;
  RatVec entries;

  int n() const { return group.n; }
  const Rational& at(int i) const { return entries(i - 1); }  // 1-based

  /// Validates the chamber inequalities; throws InvalidWeightError naming
  /// the violated one.
  static Weight checked(GroupSpec g, RatVec entries);
};

/// Partition of {1..n} into maximal constant runs of the weight,
/// l_{n_1} > l_{n_1+1}, ..., with values v_1 > v_2 > ... > v_{m+1}.
/// sizes[j] is the size of block j+1 (so sizes.size() == m+1); this differs
/// from the convention that indexes k_j by the right breakpoint, so that
/// k_j here is simply the number of entries equal to v_j.
struct BlockStructure {
  int m = 0;                       // number of strict drops
  std::vector<int> breakpoints;    // n_1 < ... < n_m
  std::vector<int> sizes;          // k_1, ..., k_{m+1}
  std::vector<Rational> values;    // v_1 > ... > v_{m+1}

  /// n_a for a in 0..m+1 with n_0 = 0 and n_{m+1} = n.
  int n_of(int a) const;
  /// 1-based block index of entry i.
  int block_of(int i) const;
  int n() const { return n_of(m + 1); }
};

BlockStructure block_structure(const Weight& w);

enum class CorootKind { Difference, Sum, Short };  // (ej-ek)v, (ej+ek)v, ejv

struct CorootPairing {
  CorootKind kind;
  int j = 0, k = 0;  // k unused for Short
  Rational value;
  std::string label() const;
};

/// One entry per positive coroot of the group.
std::vector<CorootPairing> coroot_pairings(const Weight& w);

/// True iff no coroot pairing is strictly positive (the orbit is a point).
bool is_point_orbit(const Weight& w);

/// min over strictly positive coroot pairings. Throws PointOrbitError.
Rational r_of(const Weight& w);

/// The same minimum computed from the block data alone: adjacent block
/// drops, plus the minimal positive sum pairing for the orthogonal
/// families. Cross-checked against r_of as an invariant.
Rational r_closed_form(const Weight& w);

/// (|ln| != l(n-1)) or (ln == 0) or (|ln| >= r). SO families only;
/// vacuously true for n = 1. For ln >= 0 (always the case for SO(2n+1))
/// the absolute values are vacuous and this is the familiar disjunction;
/// stating it on |ln| makes it invariant under the outer flip ln -> -ln of
/// SO(2n), without which the edge construction genuinely under-delivers on
/// weights with v_m = -v_{m+1}. Throws WrongFamilyError on U(n).
bool condition_star(const Weight& w);

struct LowerBound {
  Rational r_prime;
  bool star;  // always true for U(n)
};

/// The certified width lower bound: r for U(n) and for SO weights
/// satisfying the star condition, |ln| otherwise (then r > |ln| > 0 holds).
LowerBound lower_bound(const Weight& w);

/// dim_R of the stabilizer of the weight, from block data. For SO(2n) the
/// blocks with values v and -v coalesce (the stabilizer mixes the paired
/// rotation planes into one unitary factor).
int stabilizer_dim(const Weight& w);

struct OrbitDims {
  int real_dim;
  int complex_dim;  // N, the box count of the diagram
};

/// dim G - dim Stab and its half.
OrbitDims orbit_dims(const Weight& w);

/// The classical sum-of-k(k-1) expressions for the orbit dimension (with
/// the ln = 0 correction term k(k+1) resp. k(k-1), which the stabilizer
/// computation fixes at twice the coefficient sometimes quoted). Used as a
/// cross-check; disagrees with orbit_dims only for SO(2n) weights where
/// v_m = -v_{m+1}, which this expression does not see.
int orbit_dim_from_blocks(const Weight& w);

/// If some difference li - lj integrally divides every difference, the
/// Gromov width of the U(n) orbit equals |li - lj| (= r). Returns that
/// value, or nothing. Throws WrongFamilyError for SO inputs.
std::optional<Rational> exact_width(const Weight& w);

struct Indecomposability {
  bool indecomposable;
  std::optional<Rational> upper_bound;  // min coroot pairing, when indecomposable
};

/// True iff some simple root pairing integrally divides every positive
/// root pairing. Requires a regular weight (throws NotRegularError).
Indecomposability is_indecomposable(const Weight& w);

}  // namespace gtwidth
