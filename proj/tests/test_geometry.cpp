#include <doctest.h>

#include <algorithm>
#include <random>

#include "nivat/geometry.hpp"

using namespace nivat;

TEST_CASE("checked arithmetic throws on overflow") {
  i64 big = std::numeric_limits<i64>::max();
  CHECK_THROWS_AS(checked_add(big, 1), error);
  CHECK_THROWS_AS(checked_mul(big, 2), error);
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_sub(2, 3) == -1);
}

TEST_CASE("floor_div rounds toward minus infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-6, 2) == -3);
  CHECK(floor_div(7, -2) == -4);
}

TEST_CASE("primitive direction and multiplier") {
  auto [l, m] = primitive({6, -4});
  CHECK(l.dir == Vec2{3, -2});
  CHECK(m == 2);
  CHECK_THROWS_AS(primitive({0, 0}), error);
  auto [l2, m2] = primitive({0, -5});
  CHECK(l2.dir == Vec2{0, -1});
  CHECK(m2 == 5);
}

TEST_CASE("left normal and half plane orientation") {
  // Direction (1,1): normal (-1,1); the half plane through the origin
  // contains points above the diagonal.
  OrientedLine l{{1, 1}};
  AnchoredLine a = AnchoredLine::through(l, {0, 0});
  CHECK(a.half_plane_contains({0, 1}));
  CHECK(a.half_plane_contains({5, 5}));
  CHECK(!a.half_plane_contains({1, 0}));
  CHECK(a.on_line({3, 3}));
  // The next line widens the half plane by exactly one lattice line.
  CHECK(a.next_line().offset == a.offset - 1);
  CHECK(a.next_line().half_plane_contains({0, 0}));
  CHECK(!a.next_line().on_line({0, 0}));
  CHECK(a.next_line().on_line({1, 0}));
  CHECK(!a.half_plane_contains({1, 0}));
}

TEST_CASE("support line of the unit square") {
  std::vector<Vec2> sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto sc = support_line(OrientedLine{{1, 1}}, sq);
  CHECK(sc.contact == std::vector<Vec2>{{1, 0}});
  for (Vec2 g : sq) CHECK(sc.line.half_plane_contains(g));
  auto sc2 = support_line(OrientedLine{{1, 0}}, sq);
  CHECK(sc2.contact == std::vector<Vec2>{{0, 0}, {1, 0}});
}

TEST_CASE("hull fills interior lattice points") {
  auto s = ConvexLatticeSet::hull({{0, 0}, {3, 0}, {0, 3}});
  CHECK(s.size() == 10);
  CHECK(s.contains({1, 1}));
  CHECK(!s.contains({2, 2}));
  CHECK(s.vertices().size() == 3);
  CHECK(s.area2() == 9);
}

TEST_CASE("hull of degenerate inputs") {
  auto pt = ConvexLatticeSet::hull({{2, 5}});
  CHECK(pt.size() == 1);
  CHECK(pt.degenerate());
  auto seg = ConvexLatticeSet::hull({{0, 0}, {4, 2}});
  CHECK(seg.size() == 3);  // includes (2,1)
  CHECK(seg.degenerate());
  CHECK_THROWS_AS(seg.edges(), error);
}

TEST_CASE("hull is idempotent on random point clouds") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<i64> d(-6, 6);
  for (int it = 0; it < 50; ++it) {
    std::vector<Vec2> pts;
    int n = 1 + static_cast<int>(rng() % 9);
    for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
    auto h1 = ConvexLatticeSet::hull(pts);
    auto h2 = ConvexLatticeSet::hull(h1.points());
    CHECK(h1 == h2);
    for (Vec2 g : pts) CHECK(h1.contains(g));
  }
}

TEST_CASE("edges walk the hull counterclockwise") {
  auto s = ConvexLatticeSet::hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  auto es = s.edges();
  REQUIRE(es.size() == 4);
  i64 area2 = 0;
  for (const auto& e : es) area2 += cross(e.from, e.to);
  CHECK(area2 == s.area2());
  CHECK(es[0].lattice_count() == 3);
}

TEST_CASE("weak envelopment compares parallel edge lengths") {
  auto small = ConvexLatticeSet::hull({{0, 0}, {1, 0}, {0, 1}});
  auto large = ConvexLatticeSet::hull({{0, 0}, {3, 0}, {0, 3}});
  // Every edge of the big triangle has a parallel edge of the small one
  // with at most as many lattice points.
  CHECK(is_weakly_enveloped(large, small));
  CHECK(!is_weakly_enveloped(small, large));
  auto seg = ConvexLatticeSet::hull({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(is_weakly_enveloped(seg, large), error);
}
