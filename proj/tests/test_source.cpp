#include <doctest.h>

#include <random>

#include "nivat/source.hpp"

using namespace nivat;

namespace {

ConfigurationSource checkerboard() {
  return ConfigurationSource::doubly_periodic({1, 1}, {1, -1}, {{0}, {1}});
}

ConfigurationSource tm_layer() {
  return ConfigurationSource::layer(
      {0, 1}, Sequence1D::substitution({{0, {0, 1}}, {1, {1, 0}}}, 0));
}

}  // namespace

TEST_CASE("checkerboard evaluates to the parity of x+y") {
  auto src = checkerboard();
  for (i64 x = -5; x <= 5; ++x)
    for (i64 y = -5; y <= 5; ++y)
      CHECK(src.eval({x, y}) == (((x + y) % 2) + 2) % 2);
  CHECK(src.exact_lattice());
  auto hnf = src.period_lattice();
  REQUIRE(hnf);
  CHECK(hnf->index() == 2);
}

TEST_CASE("doubly periodic table rows must match the fundamental domain") {
  CHECK_THROWS_AS(
      ConfigurationSource::doubly_periodic({1, 1}, {1, -1}, {{0, 1}}), error);
  CHECK_THROWS_AS(
      ConfigurationSource::doubly_periodic({2, 0}, {4, 0}, {{1}}), error);
}

TEST_CASE("declared periods are lattice invariances") {
  auto src = ConfigurationSource::doubly_periodic({3, 0}, {0, 2},
                                                  {{1, 2, 3}, {4, 5, 6}});
  for (Vec2 h : src.declared_periods())
    for (i64 x = -4; x <= 4; ++x)
      for (i64 y = -4; y <= 4; ++y)
        CHECK(src.eval(Vec2{x, y} + h) == src.eval({x, y}));
}

TEST_CASE("layer values are constant along the layer period") {
  auto src = tm_layer();
  for (i64 x = -6; x <= 6; ++x)
    for (i64 y = -6; y <= 6; ++y)
      CHECK(src.eval({x, y}) == src.eval({x, y + 1}));
  CHECK(!src.exact_lattice());
}

TEST_CASE("layer transversal steps the driving sequence by one") {
  auto src = tm_layer();
  Vec2 w = src.layer_transversal();
  CHECK(cross(src.layer_period(), w) == 1);
  for (i64 t = -5; t <= 5; ++t)
    CHECK(src.eval(t * w) == src.layer_sequence().at(t));
}

TEST_CASE("shift composes additively") {
  auto src = tm_layer();
  std::mt19937 rng(7);
  std::uniform_int_distribution<i64> d(-10, 10);
  for (int it = 0; it < 40; ++it) {
    Vec2 u{d(rng), d(rng)}, v{d(rng), d(rng)}, g{d(rng), d(rng)};
    CHECK(src.shifted(u).shifted(v).eval(g) == src.shifted(u + v).eval(g));
    CHECK(src.shifted(u).eval(g) == src.eval(g + u));
  }
}

TEST_CASE("mod-p reduction reduces symbols pointwise") {
  auto src = ConfigurationSource::doubly_periodic({3, 0}, {0, 2},
                                                  {{1, 2, 3}, {4, 5, 6}});
  auto red = src.reduced_mod(3);
  for (i64 x = -4; x <= 4; ++x)
    for (i64 y = -4; y <= 4; ++y)
      CHECK(red.eval({x, y}) == ((src.eval({x, y}) % 3) + 3) % 3);
}

TEST_CASE("sum evaluates the linear combination") {
  auto a = tm_layer();
  auto b = checkerboard();
  auto s = ConfigurationSource::sum({{2, a}, {-1, b}});
  for (i64 x = -4; x <= 4; ++x)
    for (i64 y = -4; y <= 4; ++y)
      CHECK(s.eval({x, y}) == 2 * a.eval({x, y}) - b.eval({x, y}));
}

TEST_CASE("pattern canonical key ignores translation") {
  auto src = checkerboard();
  auto p1 = window(src, {{0, 0}, {1, 0}, {0, 1}});
  auto p2 = window(src.shifted({2, 4}), {{5, 5}, {6, 5}, {5, 6}});
  CHECK(p1 == p2);
  auto p3 = window(src.shifted({1, 0}), {{0, 0}, {1, 0}, {0, 1}});
  CHECK(!(p1 == p3));
}

TEST_CASE("pattern restriction keeps values aligned") {
  auto src = checkerboard();
  auto p = window(src, rect(3, 3));
  auto r = p.restrict({{0, 0}, {2, 2}});
  CHECK(r.value_at({0, 0}) == src.eval({0, 0}));
  CHECK(r.value_at({2, 2}) == src.eval({2, 2}));
  CHECK(!r.value_at({1, 1}));
  CHECK_THROWS_AS(p.restrict({{9, 9}}), error);
}

TEST_CASE("window period check is vacuous on empty overlap") {
  auto src = tm_layer();
  auto p = window(src, rect(2, 2));
  CHECK(window_period_check(p, {50, 50}));
  CHECK(window_period_check(p, {0, 1}));
  CHECK(!window_period_check(window(src, rect(4, 1)), {1, 0}));
}

TEST_CASE("detect_periods finds exactly the vertical multiples for a layer") {
  auto src = tm_layer();
  auto ps = detect_periods(src, 4);
  CHECK(!ps.empty());
  for (Vec2 h : ps) {
    CHECK(h.x == 0);
    CHECK(h.y != 0);
  }
  CHECK(std::count(ps.begin(), ps.end(), Vec2{0, 1}) == 1);
  CHECK(std::count(ps.begin(), ps.end(), Vec2{0, -3}) == 1);
}
