#include "doctest.h"

#include <set>

#include "gtwidth/diagram.hpp"
#include "support/weight_gen.hpp"

using namespace gtwidth;
using namespace gtwidth::testgen;

namespace {

std::vector<Box> box_list(const Diagram& d) {
  std::vector<Box> out;
  for (const auto& info : d.boxes()) out.push_back(info.box);
  return out;
}

}  // namespace

TEST_CASE("ladder diagrams on worked weights") {
  {
    const Diagram d = Diagram::build(U({"3", "3", "1"}));
    CHECK(box_list(d) == std::vector<Box>{{2, 1}, {1, 1}});
    CHECK(d.basis_index({2, 1}) == 0);
    CHECK(d.basis_index({1, 1}) == 1);
    CHECK_FALSE(d.is_box({1, 2}));  // forced equal to the top value
  }
  {
    const Diagram d = Diagram::build(U({"3", "1", "0"}));
    CHECK(box_list(d) == std::vector<Box>{{2, 1}, {1, 1}, {1, 2}});
  }
  {
    const Diagram d = Diagram::build(SOodd({"4"}));
    CHECK(d.size() == 1);
    CHECK(d.boxes()[0].box == Box{1, 0});
    CHECK(d.boxes()[0].level == 2);
    CHECK(d.boxes()[0].index == 1);
  }
  CHECK_THROWS_AS(Diagram::build(U({"2", "2"})), PointOrbitError);
}

TEST_CASE("row/column to diagonal square index") {
  const Diagram fig = Diagram::build(U({"9", "9", "9", "6", "6", "3", "3", "1"}));
  CHECK(fig.g_of(5) == 2);
  CHECK(fig.g_of(4) == 2);
  CHECK(fig.g_of(3) == 3);
  CHECK(fig.g_of(2) == 3);
  CHECK(fig.g_of(1) == 4);

  const Diagram d1 = Diagram::build(U({"3", "3", "1"}));
  CHECK(d1.g_of(1) == 2);
  CHECK(d1.g_of(2) == 1);
  CHECK(d1.g_of(3) == 1);
  const Diagram d2 = Diagram::build(U({"3", "1", "0"}));
  CHECK(d2.g_of(1) == 3);
  CHECK(d2.g_of(2) == 2);
  CHECK(d2.g_of(3) == 1);
  CHECK_THROWS_AS(d2.g_of(0), std::out_of_range);
  CHECK_THROWS_AS(d2.g_of(4), std::out_of_range);

  // Orthogonal diagrams index columns instead.
  const Diagram so = Diagram::build(SOodd({"5", "1"}));
  CHECK(so.g_of(1) == 1);
  CHECK(so.g_of(2) == 2);
}

TEST_CASE("so-diagram shapes") {
  {
    const Diagram d = Diagram::build(SOodd({"5", "1"}));
    CHECK(box_list(d) == std::vector<Box>{{1, 1}, {1, 0}, {1, -1}, {2, 0}});
  }
  {
    // ln = 0 removes everything under the last diagonal square.
    const Diagram d = Diagram::build(SOodd({"4", "0"}));
    CHECK(box_list(d) == std::vector<Box>{{1, 1}, {1, 0}, {1, -1}});
  }
  {
    const Diagram d = Diagram::build(SOeven({"3", "3"}));
    CHECK(box_list(d) == std::vector<Box>{{1, 0}});
  }
  {
    // The +- merge kills the would-be ladder box (1,1).
    const Diagram d = Diagram::build(SOeven({"3", "-3"}));
    CHECK(box_list(d) == std::vector<Box>{{1, 0}});
  }
  {
    const Diagram d = Diagram::build(SOeven({"5", "3", "-3"}));
    CHECK(box_list(d) ==
          std::vector<Box>{{1, 2}, {1, 1}, {1, 0}, {1, -1}, {2, 0}});
  }
}

TEST_CASE("regular box counts match the closed forms") {
  CHECK(Diagram::build(U({"4", "3", "2", "1"})).size() == 6);            // n(n-1)/2
  CHECK(Diagram::build(SOodd({"4", "3", "2", "1"})).size() == 16);       // n^2
  CHECK(Diagram::build(SOeven({"4", "3", "2", "1"})).size() == 12);      // n(n-1)
}

TEST_CASE("randomized: box count equals the orbit's complex dimension") {
  std::mt19937_64 rng(777);
  const GroupFamily fams[] = {GroupFamily::UnitaryU, GroupFamily::OddOrthogonal,
                              GroupFamily::EvenOrthogonal};
  for (GroupFamily fam : fams) {
    for (int i = 0; i < 200; ++i) {
      GenOptions opt;
      opt.force_ties = (i % 2 == 0);
      opt.force_merge = (fam == GroupFamily::EvenOrthogonal && i % 5 == 0);
      const int min_n = fam == GroupFamily::EvenOrthogonal ? 2 : 1;
      std::uniform_int_distribution<int> nd(min_n, 6);
      Weight w = random_weight(fam, nd(rng), rng, opt);
      if (is_point_orbit(w)) continue;
      const Diagram d = Diagram::build(w);
      CAPTURE(d.render_ascii());
      CHECK(d.size() == orbit_dims(w).complex_dim);

      // Basis order is a bijection onto 0..N-1.
      std::set<int> seen;
      for (const auto& info : d.boxes()) seen.insert(d.basis_index(info.box));
      CHECK(static_cast<int>(seen.size()) == d.size());
      CHECK_THROWS_AS(d.basis_index({99, 99}), std::out_of_range);

      // Box labels are unique and their per-level count matches the level
      // size minus the constants at that level.
      std::set<std::pair<int, int>> labels;
      for (const auto& info : d.boxes()) labels.insert({info.level, info.index});
      CHECK(labels.size() == static_cast<std::size_t>(d.size()));
      if (w.group.is_orthogonal()) {
        const int m0 = w.group.ambient_size();
        for (int level = 2; level < m0; ++level) {
          int boxes_at = 0, constants_at = 0;
          for (int j = 1; j <= w.n(); ++j) {
            for (int k = d.k_min(j); j + k <= w.n() + 1; ++k) {
              if (!d.slot_exists(j, k)) continue;
              if (d.slot_label(j, k).first != level) continue;
              if (d.is_box({j, k}))
                ++boxes_at;
              else
                ++constants_at;
            }
          }
          CHECK(boxes_at + constants_at == level / 2);
        }
      }

      // Ladder part is downward closed.
      for (const auto& info : d.boxes()) {
        const Box b = info.box;
        if (b.k < 1) continue;
        for (int j = 1; j <= b.j; ++j)
          for (int k = 1; k <= b.k; ++k) CHECK(d.is_box({j, k}));
      }
    }
  }
}

TEST_CASE("ascii renderer mentions every box") {
  const Diagram d = Diagram::build(SOodd({"5", "1"}));
  const std::string art = d.render_ascii();
  CHECK(art.find("(1,-1)") != std::string::npos);
  CHECK(art.find("(2,0)") != std::string::npos);
  CHECK(art.find("N = 4") != std::string::npos);
}
