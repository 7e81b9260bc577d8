#include <doctest.h>

#include <set>
#include <sstream>

#include "nivat/complexity.hpp"

using namespace nivat;

namespace {

ConfigurationSource checkerboard() {
  return ConfigurationSource::doubly_periodic({1, 1}, {1, -1}, {{0}, {1}});
}

ConfigurationSource tm_layer() {
  return ConfigurationSource::layer(
      {0, 1}, Sequence1D::substitution({{0, {0, 1}}, {1, {1, 0}}}, 0));
}

// Independent census oracle: raw string keys over a fixed translate box.
std::size_t brute_census(const ConfigurationSource& src,
                         const std::vector<Vec2>& shape, i64 radius) {
  std::set<std::string> seen;
  for (i64 ty = -radius; ty <= radius; ++ty)
    for (i64 tx = -radius; tx <= radius; ++tx) {
      std::ostringstream key;
      for (Vec2 g : shape) key << src.eval(g + Vec2{tx, ty}) << ",";
      seen.insert(key.str());
    }
  return seen.size();
}

}  // namespace

TEST_CASE("sampled census agrees with the brute-force oracle") {
  auto src = tm_layer();
  for (i64 n = 1; n <= 4; ++n) {
    auto c = census(src, rect(n, n), Sampling::Radius(32));
    CHECK(c.count() == brute_census(src, rect(n, n), 32));
    CHECK(!c.exact);
  }
}

TEST_CASE("exact census of the checkerboard") {
  auto src = checkerboard();
  for (i64 n = 1; n <= 6; ++n)
    for (i64 k = 1; k <= 6; ++k)
      CHECK(complexity_rect(src, n, k, Sampling::Exact()) == 2);
}

TEST_CASE("exact sampling rejects non-lattice sources") {
  CHECK_THROWS_AS(census(tm_layer(), rect(2, 2), Sampling::Exact()), error);
}

TEST_CASE("empty shape has one (empty) pattern") {
  CHECK(census(checkerboard(), {}, Sampling::Exact()).count() == 1);
}

TEST_CASE("census is independent of the worker count") {
  auto src = tm_layer();
  setenv("NIVAT_THREADS", "1", 1);
  auto c1 = census(src, rect(3, 3), Sampling::Radius(40));
  setenv("NIVAT_THREADS", "7", 1);
  auto c2 = census(src, rect(3, 3), Sampling::Radius(40));
  unsetenv("NIVAT_THREADS");
  CHECK(c1.count() == c2.count());
  auto it1 = c1.patterns.begin();
  for (auto it2 = c2.patterns.begin(); it2 != c2.patterns.end(); ++it1, ++it2)
    CHECK(it1->first == it2->first);
}

TEST_CASE("generated points of the checkerboard square") {
  auto src = checkerboard();
  auto sq = rect(2, 2);
  for (Vec2 g : sq) CHECK(is_generated(src, sq, g, Sampling::Exact()));
  CHECK_THROWS_AS(is_generated(src, sq, {9, 9}, Sampling::Exact()), error);
  CHECK_THROWS_AS(is_generated(src, {{0, 0}}, {0, 0}, Sampling::Exact()), error);
}

TEST_CASE("generating sets of the checkerboard") {
  auto src = checkerboard();
  CHECK(is_generating_set(src, ConvexLatticeSet::hull(rect(2, 2)),
                          Sampling::Exact()));
  CHECK(is_generating_set(src, ConvexLatticeSet::hull({{0, 0}}),
                          Sampling::Exact()));
}

TEST_CASE("minimal generating set inside a square") {
  auto src = checkerboard();
  auto u = ConvexLatticeSet::hull(rect(3, 3));
  auto mg = find_minimal_generating(src, u, Sampling::Exact());
  CHECK(mg.exhaustive);
  CHECK(mg.complexity <= mg.set.size());
  CHECK(is_generating_set(src, mg.set, Sampling::Exact()));
  // Checkerboard: P = 2, so any two-point set generates.
  CHECK(mg.set.size() == 2);
  CHECK(!mg.boundary.empty());
  for (const auto& b : mg.boundary) CHECK(b.drop <= b.bound);
}

TEST_CASE("minimal generating errors when complexity exceeds the size") {
  auto bad = ConfigurationSource::doubly_periodic(
      {4, 0}, {0, 4},
      {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}});
  auto u = ConvexLatticeSet::hull(rect(2, 2));
  CHECK_THROWS_AS(find_minimal_generating(bad, u, Sampling::Exact()), error);
}

TEST_CASE("extension counts across a support line") {
  auto src = checkerboard();
  auto shape = rect(2, 2);
  OrientedLine l{{1, 0}};
  auto base = census(src, std::vector<Vec2>{{0, 1}, {1, 1}}, Sampling::Exact());
  for (const auto& [key, gamma] : base.patterns)
    CHECK(extension_count(src, shape, l, gamma, Sampling::Exact()) == 1);
  Pattern fake;
  fake.domain = {{0, 1}, {1, 1}};
  fake.values = {7, 7};
  CHECK_THROWS_AS(extension_count(src, shape, l, fake, Sampling::Exact()),
                  error);
}

TEST_CASE("Morse-Hedlund on periodic, preperiodic, and complex words") {
  std::vector<i64> periodic;
  for (int i = 0; i < 60; ++i) periodic.push_back(i % 3);
  auto v1 = morse_hedlund(periodic, 4, 60);
  CHECK(v1.kind == MorseHedlundVerdict::Kind::periodic);
  CHECK(v1.period == 3);

  std::vector<i64> pre{9, 9};
  for (int i = 0; i < 58; ++i) pre.push_back(i % 2);
  auto v2 = morse_hedlund(pre, 5, 60);
  CHECK(v2.kind == MorseHedlundVerdict::Kind::preperiodic);
  CHECK(v2.offset == 2);
  CHECK(v2.period == 2);

  auto tm = Sequence1D::substitution({{0, {0, 1}}, {1, {1, 0}}}, 0);
  std::vector<i64> word;
  for (i64 i = 0; i < 120; ++i) word.push_back(tm.at(i));
  CHECK(morse_hedlund(word, 4, 120).kind == MorseHedlundVerdict::Kind::no_bound);

  CHECK_THROWS_AS(morse_hedlund(periodic, 4, 8), error);
}
