#include <doctest.h>

#include <string>

#include "nivat/sequence.hpp"

using namespace nivat;

namespace {

// Thue-Morse oracle: parity of the popcount of n.
i64 tm_oracle(i64 n) {
  int bits = 0;
  for (; n; n >>= 1) bits += static_cast<int>(n & 1);
  return bits & 1;
}

// Fibonacci word oracle via the concatenation recurrence
// S_1 = 0, S_2 = 01, S_{k+1} = S_k S_{k-1}.
std::string fib_oracle_word(std::size_t len) {
  std::string a = "0", b = "01";
  while (b.size() < len) {
    std::string c = b + a;
    a = b;
    b = c;
  }
  return b.substr(0, len);
}

}  // namespace

TEST_CASE("periodic word wraps in both directions") {
  auto s = Sequence1D::periodic_word({1, 2, 3});
  CHECK(s.at(0) == 1);
  CHECK(s.at(4) == 2);
  CHECK(s.at(-1) == 3);
  CHECK(s.at(-3) == 1);
  CHECK(s.at(300) == 1);
}

TEST_CASE("Thue-Morse substitution matches the popcount oracle") {
  auto s = Sequence1D::substitution({{0, {0, 1}}, {1, {1, 0}}}, 0);
  for (i64 i = 0; i < 512; ++i) CHECK(s.at(i) == tm_oracle(i));
}

TEST_CASE("Thue-Morse negative side is the complementary fixed point") {
  auto s = Sequence1D::substitution({{0, {0, 1}}, {1, {1, 0}}}, 0);
  // The rule for 1 starts with 1, so indices -n-1 read the fixed point
  // seeded at 1, which is the bitwise complement of the one seeded at 0.
  for (i64 n = 0; n < 256; ++n) CHECK(s.at(-n - 1) == 1 - tm_oracle(n));
}

TEST_CASE("Fibonacci substitution matches the concatenation oracle") {
  auto s = Sequence1D::substitution({{0, {0, 1}}, {1, {0}}}, 0);
  std::string oracle = fib_oracle_word(400);
  for (i64 i = 0; i < 400; ++i)
    CHECK(s.at(i) == oracle[static_cast<std::size_t>(i)] - '0');
}

TEST_CASE("substitution rejects a seed rule not starting with the seed") {
  CHECK_THROWS_AS(Sequence1D::substitution({{0, {1, 0}}, {1, {0}}}, 0), error);
}

TEST_CASE("eventually periodic sequence") {
  auto s = Sequence1D::eventually_periodic({7, 7, 7}, {0, 1});
  CHECK(s.at(0) == 7);
  CHECK(s.at(2) == 7);
  CHECK(s.at(3) == 0);
  CHECK(s.at(4) == 1);
  CHECK(s.at(5) == 0);
  // Negative side continues the periodic phase (i - pre) mod per.
  CHECK(s.at(-1) == 0);
  CHECK(s.at(-2) == 1);
}
