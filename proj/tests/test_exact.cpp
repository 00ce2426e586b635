#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidtrees/lincomb.hpp>
#include <braidtrees/rational.hpp>
#include <braidtrees/tensor.hpp>

#include <braidtrees/linalg.hpp>

#include <cstdlib>

using namespace braidtrees;

TEST_CASE("rational parsing and canonical serialization") {
  CHECK(rational_to_string(rational_from_string("2/6")) == "1/3");
  CHECK(rational_to_string(rational_from_string("-2/6")) == "-1/3");
  CHECK(rational_to_string(rational_from_string("4/-6")) == "-2/3");
  CHECK(rational_to_string(rational_from_string("-4/-6")) == "2/3");
  CHECK(rational_to_string(rational_from_string("0/5")) == "0");
  CHECK(rational_to_string(rational_from_string("7")) == "7");
  CHECK(rational_to_string(rational_from_string("-7/1")) == "-7");
  // Arbitrary precision: 100! / 99! reduces to 100.
  Rational big = rational_from_string(
      "9332621544394415268169923885626670049071596826438162146859296389521759999"
      "3229915608941463976156518286253697920827223758251185210916864000000000000"
      "000000000000");
  Rational smaller = rational_from_string(
      "9332621544394415268169923885626670049071596826438162146859296389521759999"
      "3229915608941463976156518286253697920827223758251185210916864000000000000"
      "000000000000/100");
  CHECK(big / smaller == Rational(100));

  CHECK_THROWS_AS(rational_from_string("1/0"), DomainError);
  CHECK_THROWS_AS(rational_from_string(""), DomainError);
  CHECK_THROWS_AS(rational_from_string("x"), DomainError);
  CHECK_THROWS_AS(rational_from_string("1/2/3"), DomainError);
  CHECK_THROWS_AS(rational_from_string("1.5"), DomainError);
}

TEST_CASE("rational arithmetic is exact") {
  Rational third(1, 3);
  Rational sum = third + third + third;
  CHECK(sum == Rational(1));
  CHECK(rational_to_string(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("tensor words render as basis labels") {
  CHECK(basis_label(1) == "e1");
  CHECK(basis_label(12) == "e12");
  TensorWord w{1, 2, 1};
  CHECK(canonical_key(w) == "e1 e2 e1");
  CHECK(canonical_key(TensorWord{}) == "");
}

namespace {
// A minimal basis type for exercising LinComb.
struct Tok {
  std::string s;
};
std::string canonical_key(const Tok& t) { return t.s; }
}  // namespace

TEST_CASE("linear combinations normalize, order deterministically, drop zeros") {
  using L = LinComb<Tok>;
  L a = L::single(Tok{"b"}, Rational(2));
  a += L::single(Tok{"a"}, Rational(1, 2));
  a += L::single(Tok{"b"}, Rational(-2));
  REQUIRE(a.size() == 1);
  CHECK(a.terms()[0].key == "a");
  CHECK(a.terms()[0].coeff == Rational(1, 2));

  L b = L::single(Tok{"a"}, Rational(1, 2));
  CHECK(a == b);
  CHECK((a - b).is_zero());

  // Ordering is lexicographic on the canonical key, independent of insertion.
  L c = L::single(Tok{"z"}) + L::single(Tok{"m"}) + L::single(Tok{"a"});
  REQUIRE(c.size() == 3);
  CHECK(c.terms()[0].key == "a");
  CHECK(c.terms()[1].key == "m");
  CHECK(c.terms()[2].key == "z");
  CHECK(c.to_string() == "a + m + z");

  L d = L::single(Tok{"a"}, Rational(-1)) + L::single(Tok{"b"}, Rational(3, 2));
  CHECK(d.to_string() == "-1 a + 3/2 b");
  CHECK(L{}.to_string() == "0");
}

TEST_CASE("linear extension over basis elements") {
  using L = LinComb<Tok>;
  L a = L::single(Tok{"x"}, Rational(2)) + L::single(Tok{"y"}, Rational(3));
  // map each basis token to a two-term combination
  L doubled = a.map([](const Tok& t) {
    return L::single(Tok{t.s + "1"}) + L::single(Tok{t.s + "2"});
  });
  CHECK(doubled.coeff_of_key("x1") == Rational(2));
  CHECK(doubled.coeff_of_key("x2") == Rational(2));
  CHECK(doubled.coeff_of_key("y1") == Rational(3));
  CHECK(doubled.coeff_of_key("y2") == Rational(3));
  CHECK(doubled.size() == 4);
}

TEST_CASE("expansion cap is enforced via environment override") {
  using L = LinComb<Tok>;
  ::setenv("BRAIDTREES_MAX_TERMS", "3", 1);
  refresh_limits();
  L a;
  a += L::single(Tok{"a"});
  a += L::single(Tok{"b"});
  a += L::single(Tok{"c"});
  CHECK(a.size() == 3);
  CHECK_THROWS_AS(a += L::single(Tok{"d"}), LimitError);
  ::unsetenv("BRAIDTREES_MAX_TERMS");
  refresh_limits();
  a += L::single(Tok{"d"});
  CHECK(a.size() == 4);
}

TEST_CASE("exact rank of small rational matrices") {
  using Row = std::vector<Rational>;
  CHECK(matrix_rank({}) == 0);
  CHECK(matrix_rank({Row{Rational(0), Rational(0)}}) == 0);
  CHECK(matrix_rank({Row{Rational(1), Rational(0)},
                     Row{Rational(0), Rational(1)}}) == 2);
  // Second row is a multiple of the first.
  CHECK(matrix_rank({Row{Rational(1), Rational(2)},
                     Row{Rational(2), Rational(4)}}) == 1);
  // The middle row is half the first (exact fractional cancellation);
  // the last row is independent of both.
  CHECK(matrix_rank({Row{Rational(1, 3), Rational(1)},
                     Row{Rational(1, 6), Rational(1, 2)},
                     Row{Rational(1, 2), Rational(1)}}) == 2);
  CHECK_THROWS_AS(matrix_rank({Row{Rational(1)}, Row{Rational(1), Rational(2)}}),
                  DomainError);
}
