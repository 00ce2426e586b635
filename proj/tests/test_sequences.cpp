// Tests for the counting sequences: Catalan, little Schroeder, lush
// tree counts (three independent routes), the quadratic generating
// function identity, the nearby-but-different comparison sequence, and
// the composition identity behind freeness dimension counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidtrees/sequences.hpp"
#include "braidtrees/trees.hpp"

#include <vector>

using namespace braidtrees;

TEST_CASE("catalan numbers") {
  const std::vector<long long> expect = {1,    1,    2,    5,     14,   42,
                                         132,  429,  1430, 4862,  16796};
  for (int n = 0; n <= 10; ++n) CHECK(catalan(n) == Int(expect[n]));
  CHECK_THROWS_AS(catalan(-1), DomainError);
}

TEST_CASE("little Schroeder numbers") {
  const std::vector<long long> expect = {1,   1,    3,     11,    45,
                                         197, 903,  4279,  20793, 103049};
  for (int n = 1; n <= 10; ++n) CHECK(schroeder_little(n) == Int(expect[n - 1]));
  CHECK_THROWS_AS(schroeder_little(0), DomainError);
}

TEST_CASE("lush counts: recursion, closed form, brute enumeration") {
  const std::vector<long long> expect = {1,   1,   2,    6,   20,
                                         72,  272, 1064, 4272};
  for (int n = 0; n <= 8; ++n) {
    CHECK(lush_count_recursive(n) == Int(expect[n]));
    CHECK(lush_count_closed(n) == Int(expect[n]));
  }
  // The two formulas keep agreeing beyond the frozen window.
  for (int n = 9; n <= 14; ++n)
    CHECK(lush_count_recursive(n) == lush_count_closed(n));
  // Brute force: enumerate angular shapes and filter.
  for (int n = 0; n <= 7; ++n)
    CHECK(Int(static_cast<long long>(lush_shapes(n).size())) ==
          lush_count_recursive(n));
}

TEST_CASE("comparison sequence agrees for seven terms then departs") {
  const std::vector<long long> expect = {1,   1,   2,    6,   20,
                                         72,  272, 1065, 4282};
  for (int m = 1; m <= 9; ++m) CHECK(a141200(m) == Int(expect[m - 1]));
  for (int n = 0; n <= 6; ++n) CHECK(a141200(n + 1) == lush_count_recursive(n));
  CHECK(a141200(8) != lush_count_recursive(7));
  CHECK(a141200(8) - lush_count_recursive(7) == Int(1));
  CHECK_THROWS_AS(a141200(0), DomainError);
}

TEST_CASE("the quadratic identity for the lush generating function") {
  // 2 G(x)^2 - (2x+1) G(x) + x + x^2 vanishes coefficientwise.
  std::vector<Rational> residual = gf_residual(12);
  REQUIRE(residual.size() == 13);
  for (const Rational& c : residual) CHECK(c == 0);
}

TEST_CASE("compositions weighted by Catalan factors recover Catalan") {
  for (int n = 0; n <= 10; ++n)
    CHECK(composition_catalan_sum(n) == catalan(n));
}
