#include <doctest.h>

#include <Eigen/Dense>

#include "nct/rational.hpp"

using namespace nct;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(1, 2));
  CHECK(Rational(BigInt(3), BigInt(-6)) == Rational(-1, 2));
  CHECK(Rational(BigInt(0), BigInt(-7)) == Rational(0));
  CHECK(to_string(Rational(-2, 3)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5/1");
}

TEST_CASE("parsing accepts p/q and plain integers") {
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("+7/2") == Rational(7, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("floor and mod-one behave on negatives") {
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(floor_of(Rational(-4, 2)) == -2);
  CHECK(mod_one(Rational(-2, 3)) == Rational(1, 3));
  CHECK(mod_one(Rational(5, 3)) == Rational(2, 3));
  CHECK(mod_one(Rational(3)) == Rational(0));
  CHECK(round_nearest(Rational(5, 2)) == 3);
  CHECK(round_nearest(Rational(-5, 2)) == -2);
}

TEST_CASE("exact linear algebra through Eigen") {
  RMatrix j(2, 2);
  j << Rational(0), Rational(1), Rational(-1), Rational(0);
  CHECK(j.determinant() == Rational(1));
  CHECK(RMatrix(j.inverse()) == RMatrix(-j));

  // singular determinants come out exactly zero, including the LU path
  RMatrix odd = RMatrix::Zero(5, 5);
  odd(0, 1) = Rational(3, 7);
  odd(1, 0) = Rational(-3, 7);
  odd(2, 3) = Rational(1);
  odd(3, 2) = Rational(-1);
  CHECK(odd.determinant() == Rational(0));
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}
