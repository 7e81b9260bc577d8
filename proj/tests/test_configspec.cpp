#include <doctest.h>

#include "nivat/configspec.hpp"

using namespace nivat;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("fixtures parse and build") {
  for (const char* name : {"constant.cfg", "checkerboard.cfg", "tm_layer.cfg",
                           "fib_sum.cfg", "doubly32.cfg"}) {
    auto spec = ConfigSpec::parse_file(fixture(name));
    auto src = spec.build_source();
    src.eval({0, 0});
  }
}

TEST_CASE("parse, print, parse yields the same evaluations") {
  for (const char* name : {"checkerboard.cfg", "tm_layer.cfg", "fib_sum.cfg"}) {
    auto spec = ConfigSpec::parse_file(fixture(name));
    auto again = ConfigSpec::parse_text(spec.print());
    CHECK(spec.print() == again.print());
    auto a = spec.build_source();
    auto b = again.build_source();
    for (i64 x = 0; x < 16; ++x)
      for (i64 y = 0; y < 16; ++y) CHECK(a.eval({x, y}) == b.eval({x, y}));
  }
}

TEST_CASE("decomposition section builds verified components") {
  auto spec = ConfigSpec::parse_file(fixture("fib_sum.cfg"));
  auto d = spec.build_decomposition();
  REQUIRE(d);
  CHECK(d->components.size() == 2);
  CHECK(d->claimed_minimal);
  auto rep = verify_decomposition(spec.build_source(), *d, centered_box(12));
  CHECK(rep.passed());
}

TEST_CASE("annihilator section parses and annihilates") {
  auto spec = ConfigSpec::parse_file(fixture("checkerboard.cfg"));
  auto phi = spec.build_annihilator();
  REQUIRE(phi);
  CHECK(annihilates(*phi, spec.build_source(), centered_box(10)).holds);
}

TEST_CASE("self component refers to the main source") {
  auto spec = ConfigSpec::parse_file(fixture("tm_layer.cfg"));
  auto d = spec.build_decomposition();
  REQUIRE(d);
  auto src = spec.build_source();
  for (i64 x = -4; x <= 4; ++x)
    for (i64 y = -4; y <= 4; ++y)
      CHECK(d->components[0].source.eval({x, y}) == src.eval({x, y}));
}

TEST_CASE("parse errors carry line numbers") {
  try {
    ConfigSpec::parse_text("[source]\nkind = layer\nh = oops\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(ConfigSpec::parse_text("kind = constant\n"), parse_error);
  CHECK_THROWS_AS(ConfigSpec::parse_text("[source]\nkind = constant\n"),
                  parse_error);  // missing value
  CHECK_THROWS_AS(ConfigSpec::parse_text(""), parse_error);
  CHECK_THROWS_AS(
      ConfigSpec::parse_text("[source]\nkind = constant\nvalue = 1\nvalue = 2\n"),
      parse_error);
}

TEST_CASE("unknown sub-source names are build errors") {
  auto spec = ConfigSpec::parse_text(
      "[source]\nkind = sum\nterms = 1*missing\n");
  CHECK_THROWS_AS(spec.build_source(), error);
}
