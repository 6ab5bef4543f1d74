#include "doctest.h"

#include "gtwidth/lie.hpp"
#include "support/weight_gen.hpp"

using namespace gtwidth;
using namespace gtwidth::testgen;

namespace {

std::multiset<Rational> pairing_values(const Weight& w) {
  std::multiset<Rational> out;
  for (const auto& p : coroot_pairings(w)) out.insert(p.value);
  return out;
}

}  // namespace

TEST_CASE("block structure on worked weights") {
  {
    auto b = block_structure(U({"3", "3", "1"}));
    CHECK(b.m == 1);
    CHECK(b.breakpoints == std::vector<int>{2});
    CHECK(b.sizes == std::vector<int>{2, 1});
  }
  {
    auto b = block_structure(U({"5", "5"}));
    CHECK(b.m == 0);
    CHECK(b.sizes == std::vector<int>{2});
  }
  {
    // (a,a,a,b,b,c,c,d) with a > b > c > d
    auto b = block_structure(U({"9", "9", "9", "6", "6", "3", "3", "1"}));
    CHECK(b.m == 3);
    CHECK(b.breakpoints == std::vector<int>{3, 5, 7});
    CHECK(b.sizes == std::vector<int>{3, 2, 2, 1});
  }
}

TEST_CASE("coroot pairings per family") {
  CHECK(pairing_values(U({"3", "1", "0"})) == std::multiset<Rational>{2, 3, 1});
  CHECK(pairing_values(SOodd({"5", "1"})) == std::multiset<Rational>{4, 6, 10, 2});
  CHECK(pairing_values(SOeven({"3", "3"})) == std::multiset<Rational>{0, 6});
}

TEST_CASE("r_of and point orbits") {
  CHECK(r_of(U({"3", "1", "0"})) == 1);
  CHECK(r_of(SOodd({"5", "1"})) == 2);
  CHECK(r_of(SOeven({"3", "3"})) == 6);
  CHECK_THROWS_AS(r_of(U({"1", "1"})), PointOrbitError);
  CHECK_THROWS_AS(r_of(U({"7"})), PointOrbitError);
  CHECK_THROWS_AS(r_of(SOodd({"0", "0"})), PointOrbitError);
  CHECK_THROWS_AS(r_of(SOeven({"2"})), PointOrbitError);  // SO(2) is abelian
  CHECK(is_point_orbit(U({"4", "4", "4"})));
  CHECK_FALSE(is_point_orbit(SOodd({"1"})));
}

TEST_CASE("closed-form r catches within-block sums for SO(2n)") {
  // Differences alone would give 4; the pair inside the tied last block
  // gives 2*1 = 2, which the enumeration also finds.
  const Weight w = SOeven({"5", "1", "1"});
  CHECK(r_of(w) == 2);
  CHECK(r_closed_form(w) == 2);
  // Sum pairing equal to zero must not enter the minimum.
  const Weight v = SOeven({"3", "-3"});
  CHECK(r_of(v) == 6);
  CHECK(r_closed_form(v) == 6);
}

TEST_CASE("condition star") {
  CHECK(condition_star(SOodd({"5", "1"})));
  CHECK_FALSE(condition_star(SOeven({"3", "3"})));
  CHECK(condition_star(SOodd({"4", "2", "0"})));
  CHECK(condition_star(SOodd({"7"})));  // n = 1: the tie clause is vacuous
  CHECK(condition_star(SOeven({"5", "-1"})));
  CHECK_THROWS_AS(condition_star(U({"2", "1"})), WrongFamilyError);
  // The +-merged corner behaves like its flipped twin (..., 1/2, 1/2):
  // |ln| ties with l(n-1) and stays below r, so the condition fails.
  CHECK_FALSE(condition_star(SOeven({"3/2", "1/2", "1/2", "-1/2"})));
  CHECK(condition_star(SOeven({"2", "1", "-1"})));  // here |ln| = r
}

TEST_CASE("lower bound") {
  {
    auto lb = lower_bound(U({"3", "1", "0"}));
    CHECK(lb.r_prime == 1);
    CHECK(lb.star);
  }
  {
    auto lb = lower_bound(SOeven({"3", "3"}));
    CHECK(lb.r_prime == 3);
    CHECK_FALSE(lb.star);
  }
  {
    auto lb = lower_bound(SOodd({"5/2"}));
    CHECK(lb.r_prime == 5);
    CHECK(lb.star);
  }
  {
    const Weight w = SOeven({"3/2", "1/2", "1/2", "-1/2"});
    CHECK(r_of(w) == 1);
    auto lb = lower_bound(w);
    CHECK(lb.r_prime == Rational(1, 2));  // |ln|
    CHECK_FALSE(lb.star);
  }
}

TEST_CASE("orbit dimensions on worked weights") {
  {
    auto d = orbit_dims(U({"3", "3", "1"}));
    CHECK(d.real_dim == 4);
    CHECK(d.complex_dim == 2);
  }
  {
    auto d = orbit_dims(SOodd({"4"}));
    CHECK(d.real_dim == 2);
    CHECK(d.complex_dim == 1);
  }
  {
    auto d = orbit_dims(SOodd({"4", "0"}));
    CHECK(d.real_dim == 6);  // SO(5) mod SO(2) x SO(3)
    CHECK(d.complex_dim == 3);
  }
  {
    // Stabilizer of a +-paired pair of rotation planes is U(2), not a torus.
    auto d = orbit_dims(SOeven({"3", "-3"}));
    CHECK(stabilizer_dim(SOeven({"3", "-3"})) == 4);
    CHECK(d.real_dim == 2);
  }
  {
    auto d = orbit_dims(SOeven({"3", "3"}));
    CHECK(stabilizer_dim(SOeven({"3", "3"})) == 4);
    CHECK(d.real_dim == 2);
    CHECK(d.complex_dim == 1);
  }
}

TEST_CASE("exact width criterion") {
  CHECK(exact_width(U({"1", "0", "0"})) == Rational(1));
  CHECK(exact_width(U({"2", "1", "0"})) == Rational(1));
  CHECK(exact_width(U({"1", "1/2", "0"})) == Rational(1, 2));
  CHECK_FALSE(exact_width(U({"5", "3", "0"})).has_value());
  CHECK_THROWS_AS(exact_width(SOodd({"2", "1"})), WrongFamilyError);
}

TEST_CASE("indecomposability") {
  {
    auto ind = is_indecomposable(U({"2", "1", "0"}));
    CHECK(ind.indecomposable);
    CHECK(*ind.upper_bound == 1);
  }
  CHECK_FALSE(is_indecomposable(U({"5", "3", "0"})).indecomposable);
  CHECK(is_indecomposable(U({"1", "0"})).indecomposable);
  CHECK_THROWS_AS(is_indecomposable(U({"1", "1", "0"})), NotRegularError);
  CHECK_THROWS_AS(is_indecomposable(SOeven({"3", "-3"})), NotRegularError);
  CHECK(is_indecomposable(SOodd({"2", "1"})).indecomposable);
}

TEST_CASE("randomized: closed-form r, dims, bounds") {
  std::mt19937_64 rng(20240817);
  const GroupFamily fams[] = {GroupFamily::UnitaryU, GroupFamily::OddOrthogonal,
                              GroupFamily::EvenOrthogonal};
  for (GroupFamily fam : fams) {
    for (int i = 0; i < 250; ++i) {
      GenOptions opt;
      opt.force_ties = (i % 2 == 0);
      opt.force_merge = (fam == GroupFamily::EvenOrthogonal && i % 7 == 0);
      const int min_n = fam == GroupFamily::EvenOrthogonal ? 2 : 1;
      std::uniform_int_distribution<int> nd(min_n, 6);
      Weight w = random_weight(fam, nd(rng), rng, opt);
      if (is_point_orbit(w)) continue;
      CAPTURE(w.group.name());

      const Rational r = r_of(w);
      CHECK(r == r_closed_form(w));

      const auto lb = lower_bound(w);
      CHECK(lb.r_prime <= r);
      CHECK((lb.r_prime == r) == lb.star);

      const auto dims = orbit_dims(w);
      CHECK(dims.real_dim % 2 == 0);
      CHECK(dims.real_dim == 2 * dims.complex_dim);
      CHECK(stabilizer_dim(w) + dims.real_dim == w.group.dim());

      // The k(k-1) display agrees except for the +- merged corner it
      // cannot see.
      const auto b = block_structure(w);
      const bool merged = w.group.family == GroupFamily::EvenOrthogonal &&
                          b.values.size() >= 2 && b.values.back() < 0 &&
                          b.values[b.values.size() - 2] == -b.values.back();
      if (!merged) CHECK(dims.real_dim == orbit_dim_from_blocks(w));

      if (w.group.family == GroupFamily::UnitaryU) {
        if (auto width = exact_width(w)) CHECK(*width == r);
      }
    }
  }
}
