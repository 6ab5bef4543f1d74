#include "doctest.h"

#include <map>

#include "gtwidth/json_io.hpp"
#include "gtwidth/polytope.hpp"
#include "support/weight_gen.hpp"

using namespace gtwidth;
using namespace gtwidth::testgen;

namespace {

RatVec pt(std::vector<const char*> vals) {
  RatVec v(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) v(i) = parse_rational(vals[i]);
  return v;
}

std::map<Box, Rational> lengths_by_box(const Diagram& d) {
  std::map<Box, Rational> out;
  for (const auto& e : edges(d)) out[e.box] = e.length;
  return out;
}

}  // namespace

TEST_CASE("membership against hand-built H-representations") {
  {
    const Diagram d = Diagram::build(U({"1", "0"}));
    const Polytope p = Polytope::build(d);
    CHECK(p.contains(pt({"1/2"})));
    CHECK(p.contains(pt({"0"})));
    CHECK(p.contains(pt({"1"})));
    CHECK_FALSE(p.contains(pt({"3/2"})));
    CHECK_FALSE(p.contains(pt({"-1/100"})));
    CHECK_THROWS_AS(p.contains(pt({"0", "0"})), std::invalid_argument);
  }
  {
    // x_{2,1} in [1,3], x_{1,1} in [x_{2,1}, 3]
    const Diagram d = Diagram::build(U({"3", "3", "1"}));
    const Polytope p = Polytope::build(d);
    CHECK(p.contains(pt({"3", "3"})));  // boundary
    CHECK(p.contains(pt({"1", "1"})));
    CHECK(p.contains(pt({"2", "5/2"})));
    CHECK_FALSE(p.contains(pt({"2", "1"})));   // violates x11 >= x21
    CHECK_FALSE(p.contains(pt({"1/2", "1"})));
    CHECK_FALSE(p.contains(pt({"3", "7/2"})));
  }
  {
    const Diagram d = Diagram::build(SOodd({"2"}));
    const Polytope p = Polytope::build(d);
    CHECK(p.contains(pt({"2"})));
    CHECK(p.contains(pt({"-2"})));
    CHECK(p.contains(pt({"0"})));
    CHECK_FALSE(p.contains(pt({"-21/10"})));
  }
}

TEST_CASE("vertex V") {
  CHECK(vertex_V(Diagram::build(U({"3", "1", "0"}))) == pt({"0", "0", "1"}));
  CHECK(vertex_V(Diagram::build(U({"3", "3", "1"}))) == pt({"1", "1"}));
  CHECK(vertex_V(Diagram::build(SOodd({"4"}))) == pt({"4"}));
  CHECK(vertex_V(Diagram::build(SOodd({"5", "1"}))) == pt({"5", "5", "5", "1"}));
}

TEST_CASE("edges on worked weights") {
  {
    const Diagram d = Diagram::build(U({"3", "1", "0"}));
    auto lens = lengths_by_box(d);
    CHECK(lens[{2, 1}] == 1);
    CHECK(lens[{1, 1}] == 1);
    CHECK(lens[{1, 2}] == 2);
    for (const auto& e : edges(d)) {
      if (e.box == Box{2, 1})
        CHECK(e.moved == std::vector<Box>{{2, 1}, {1, 1}});
      if (e.box == Box{1, 2}) CHECK(e.moved == std::vector<Box>{{1, 2}});
    }
  }
  {
    auto lens = lengths_by_box(Diagram::build(U({"3", "3", "1"})));
    CHECK(lens[{2, 1}] == 2);
    CHECK(lens[{1, 1}] == 2);
  }
  {
    auto lens = lengths_by_box(Diagram::build(SOodd({"4"})));
    CHECK(lens[{1, 0}] == 8);  // single rim edge, 2*ln
  }
  {
    auto lens = lengths_by_box(Diagram::build(SOodd({"5", "1"})));
    CHECK(lens[{1, 1}] == 4);
    CHECK(lens[{1, 0}] == 4);
    CHECK(lens[{1, -1}] == 10);
    CHECK(lens[{2, 0}] == 2);
  }
}

TEST_CASE("unimodular matrix on worked weights") {
  {
    const Diagram d = Diagram::build(U({"3", "1", "0"}));
    const auto um = matrix_W(d);
    CHECK(um.det == 1);
    IntMat expected(3, 3);
    expected << 1, 0, 0, 1, 1, 0, 0, 0, 1;
    CHECK(um.W == expected);
  }
  {
    const auto um = matrix_W(Diagram::build(U({"1", "0"})));
    CHECK(um.det == 1);
    CHECK(um.W(0, 0) == 1);
  }
  {
    const auto um = matrix_W(Diagram::build(SOodd({"4"})));
    CHECK(um.det == -1);
    CHECK(um.W(0, 0) == -1);
  }
}

TEST_CASE("simplex on worked weights") {
  {
    auto verts = simplex_R(Diagram::build(U({"1", "0"})), 1);
    REQUIRE(verts.size() == 2);
    CHECK(verts[0] == pt({"0"}));
    CHECK(verts[1] == pt({"1"}));
  }
  {
    auto verts = simplex_R(Diagram::build(U({"3", "3", "1"})), 2);
    REQUIRE(verts.size() == 3);
    CHECK(verts[0] == pt({"1", "1"}));
    CHECK(verts[1] == pt({"3", "3"}));
    CHECK(verts[2] == pt({"1", "3"}));
  }
  {
    auto verts = simplex_R(Diagram::build(SOodd({"4"})), 8);
    REQUIRE(verts.size() == 2);
    CHECK(verts[0] == pt({"4"}));
    CHECK(verts[1] == pt({"-4"}));
  }
}

TEST_CASE("certificates on worked weights") {
  {
    const Certificate c = certificate(U({"3", "1", "0"}));
    CHECK(c.r_prime == 1);
    CHECK(c.detW == 1);
    CHECK(c.contained);
    CHECK(c.simplex_vertices.size() == 4);
  }
  {
    const Certificate c = certificate(SOeven({"3", "3"}));
    CHECK(c.r_prime == 3);
    CHECK_FALSE(c.star);
    CHECK(c.contained);
  }
  {
    const Certificate c = certificate(SOodd({"5", "1"}));
    CHECK(c.r_prime == 2);
    CHECK(c.star);
    CHECK(c.detW == 1);
  }
  CHECK_THROWS_AS(certificate(U({"1", "1", "1"})), PointOrbitError);
}

TEST_CASE("randomized: unimodularity, triangularity, containment, edge lengths") {
  std::mt19937_64 rng(424242);
  const GroupFamily fams[] = {GroupFamily::UnitaryU, GroupFamily::OddOrthogonal,
                              GroupFamily::EvenOrthogonal};
  for (GroupFamily fam : fams) {
    for (int i = 0; i < 120; ++i) {
      GenOptions opt;
      opt.force_ties = (i % 2 == 0);
      opt.force_merge = (fam == GroupFamily::EvenOrthogonal && i % 6 == 0);
      const int min_n = fam == GroupFamily::EvenOrthogonal ? 2 : 1;
      std::uniform_int_distribution<int> nd(min_n, 6);
      Weight w = random_weight(fam, nd(rng), rng, opt);
      if (is_point_orbit(w)) continue;
      const Diagram d = Diagram::build(w);
      CAPTURE(d.render_ascii());

      const auto um = matrix_W(d);
      CHECK((um.det == 1 || um.det == -1));
      const int diag_sign = w.group.is_orthogonal() ? -1 : 1;
      for (int c = 0; c < d.size(); ++c) {
        CHECK(um.W(c, c) == diag_sign);
        for (int r = 0; r < c; ++r) CHECK(um.W(r, c) == 0);
      }

      const Polytope p = Polytope::build(d);
      const RatVec V = vertex_V(d);
      CHECK(p.contains(V));
      const Rational r = r_of(w);
      const auto lb = lower_bound(w);

      Rational min_len;
      bool first = true;
      for (const auto& e : edges(d)) {
        // Both endpoints and the midpoint of every edge stay inside.
        RatVec other = V, mid = V;
        for (int t = 0; t < d.size(); ++t) {
          other(t) += e.length * Rational(e.direction(t));
          mid(t) += e.length / 2 * Rational(e.direction(t));
        }
        CHECK(p.contains(other));
        CHECK(p.contains(mid));
        if (first || e.length < min_len) min_len = e.length;
        first = false;

        if (w.group.is_orthogonal()) {
          // Short edges exist only when the star condition fails, and then
          // they are exactly the interior-column edges of the block whose
          // value is |ln| (= the block of column n-1), of length |ln|.
          const auto& blocks = d.blocks();
          const int n = w.n();
          const bool is_odd = fam == GroupFamily::OddOrthogonal;
          const int rim_row = is_odd ? e.box.j - n : e.box.j - n + 1;
          const int nB = blocks.n_of(blocks.block_of(e.box.j));
          const int interior_top = is_odd ? nB - n : nB - n + 1;
          const bool interior = e.box.k > rim_row && e.box.k <= interior_top;
          const bool exceptional = !lb.star && interior &&
                                   blocks.block_of(e.box.j) == blocks.block_of(n - 1);
          if (exceptional) {
            Rational abs_ln = w.at(n);
            if (abs_ln < 0) abs_ln = -abs_ln;
            CHECK(e.length == abs_ln);
          } else {
            CHECK(e.length >= r);
          }
        }
      }
      if (!w.group.is_orthogonal()) CHECK(min_len == r);
      if (w.group.is_orthogonal() && lb.star) CHECK(min_len >= r);

      const Certificate c = certificate(w);
      CHECK(c.contained);
      CHECK(static_cast<int>(c.simplex_vertices.size()) == d.size() + 1);
    }
  }
}

TEST_CASE("certificate and polytope serialization round-trips") {
  const Weight w = SOodd({"5", "1"});
  const Certificate c = certificate(w);
  const Json j = certificate_json(c);
  CHECK(rationals_from_json(j["V"]) == c.V);
  CHECK(rationals_from_json(j["simplex_vertices"][3]) == c.simplex_vertices[3]);
  CHECK(j["det_w"] == 1);
  const Json reparsed = Json::parse(j.dump());
  CHECK(reparsed == j);

  const Diagram d = Diagram::build(w);
  const Polytope p = Polytope::build(d);
  const Json pj = polytope_json(p);
  CHECK(pj["inequalities"].size() == p.inequalities().size());
  CHECK(pj["boxes"].size() == static_cast<std::size_t>(d.size()));
}
