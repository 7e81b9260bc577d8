#include <doctest.h>

#include "nivat/expansiveness.hpp"

using namespace nivat;

namespace {

ConfigurationSource checkerboard() {
  return ConfigurationSource::doubly_periodic({1, 1}, {1, -1}, {{0}, {1}});
}

ConfigurationSource tm_layer() {
  return ConfigurationSource::layer(
      {0, 1}, Sequence1D::substitution({{0, {0, 1}}, {1, {1, 0}}}, 0));
}

ConfigurationSource fib_sum() {
  auto f = [](Vec2 h) {
    return ConfigurationSource::layer(
        h, Sequence1D::substitution({{0, {0, 1}}, {1, {0}}}, 0));
  };
  return ConfigurationSource::sum({{1, f({0, 1})}, {2, f({1, 0})}});
}

}  // namespace

TEST_CASE("probe directions are the eight primitive neighbours") {
  auto ps = probe_directions();
  REQUIRE(ps.size() == 8);
  for (const auto& l : ps) {
    CHECK(l.dir.norm_inf() == 1);
    CHECK(gcd_nonneg(l.dir.x, l.dir.y) == 1);
  }
  // Angular order starting at (1,0), counterclockwise.
  CHECK(ps[0].dir == Vec2{1, 0});
  CHECK(ps[2].dir == Vec2{0, 1});
}

TEST_CASE("doubly periodic sources are certified expansive everywhere") {
  auto statuses = classify(checkerboard(), 3);
  CHECK(statuses.size() >= 8);
  for (const auto& st : statuses)
    CHECK(st.kind == DirectionStatus::Kind::certified_expansive);
}

TEST_CASE("layer directions split into witnessed and expansive") {
  AnalysisOptions opts;
  opts.sampling = Sampling::Radius(64);
  auto statuses = classify(tm_layer(), 6, opts);
  bool up_witnessed = false, down_witnessed = false;
  for (const auto& st : statuses) {
    if (st.line.dir == Vec2{0, 1})
      up_witnessed = st.kind == DirectionStatus::Kind::nonexpansive_witnessed;
    if (st.line.dir == Vec2{0, -1})
      down_witnessed = st.kind == DirectionStatus::Kind::nonexpansive_witnessed;
    if (st.line.dir == Vec2{1, 0} || st.line.dir == Vec2{-1, 0})
      CHECK(st.kind == DirectionStatus::Kind::empirically_expansive);
  }
  CHECK(up_witnessed);
  CHECK(down_witnessed);
}

TEST_CASE("witnesses replay from raw evaluation") {
  auto src = tm_layer();
  for (Vec2 d : {Vec2{0, 1}, Vec2{0, -1}}) {
    OrientedLine l{d};
    for (i64 r = 1; r <= 8; ++r) {
      auto w = nonexpansive_witness(src, l, r);
      REQUIRE(w);
      CHECK(verify_witness(src, l, *w));
      CHECK(w->radius == r);
    }
  }
}

TEST_CASE("tampered witnesses fail replay") {
  auto src = tm_layer();
  OrientedLine l{{0, 1}};
  auto w = nonexpansive_witness(src, l, 2);
  REQUIRE(w);
  auto bad = *w;
  bad.u2 = bad.u1;
  CHECK(!verify_witness(src, l, bad));
}

TEST_CASE("expansive certificate for the layer transverse direction") {
  auto src = tm_layer();
  auto cert = expansive_certificate(src, OrientedLine{{1, 0}}, 4,
                                    Sampling::Radius(64));
  REQUIRE(cert);
  auto sc = support_line(OrientedLine{{1, 0}}, cert->set);
  CHECK(sc.contact == std::vector<Vec2>{cert->contact});
}

TEST_CASE("candidate directions come from the annihilator support") {
  auto phi = difference_product({{0, 1}, {1, 0}}, Ring::integers());
  auto cands = candidate_directions(fib_sum(), phi, Sampling::Radius(32));
  CHECK(cands.size() >= 4);
  auto has = [&](Vec2 d) {
    for (const auto& l : cands)
      if (l.dir == d) return true;
    return false;
  };
  CHECK(has({0, 1}));
  CHECK(has({0, -1}));
  CHECK(has({1, 0}));
  CHECK(has({-1, 0}));
}

TEST_CASE("szabados report for the layer passes all three checks") {
  Decomposition d;
  d.components.push_back({tm_layer(), {0, 1}});
  d.claimed_minimal = true;
  auto rep = szabados_report(tm_layer(), d, 8);
  CHECK(rep.period_lines == std::vector<Vec2>{{0, 1}});
  CHECK(rep.witnessed_lines_are_period_lines.status == "pass");
  CHECK(rep.period_lines_witnessed_both_ways.status == "pass");
  CHECK(rep.non_period_lines_expansive.status == "pass");
}

TEST_CASE("szabados report for the checkerboard is vacuous and fail-expected") {
  Decomposition d;
  d.components.push_back({checkerboard(), {1, 1}});
  auto rep = szabados_report(checkerboard(), d, 3);
  CHECK(rep.witnessed_lines_are_period_lines.status == "vacuous-pass");
  CHECK(rep.period_lines_witnessed_both_ways.status ==
        "fail-expected: doubly periodic");
  CHECK(rep.non_period_lines_expansive.status == "pass");
}
