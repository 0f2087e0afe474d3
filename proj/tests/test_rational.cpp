#include "doctest.h"
#include "sp16/rational.hpp"

using sp16::Rational;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.to_string() == "-3/2");
  CHECK(r.denominator() == 2);
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(0, -7) == Rational(0));
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("values beyond 64 bits") {
  Rational x(1);
  for (int i = 0; i < 100; ++i) x *= Rational(3);
  CHECK(x.to_string() == "515377520732011331036461129765621272702107522001");
  CHECK(x / x == Rational(1));
}

TEST_CASE("ordering and helpers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(sp16::abs(Rational(-3, 4)) == Rational(3, 4));
  CHECK(sp16::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(sp16::pow(Rational(5), 0) == Rational(1));
  CHECK(Rational(3, 4).sign() == 1);
  CHECK(Rational(-3, 4).sign() == -1);
  CHECK(Rational(0).is_zero());
}

TEST_CASE("parsing and canonical text") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::is_canonical_text("3/4"));
  CHECK(Rational::is_canonical_text("-7"));
  CHECK_FALSE(Rational::is_canonical_text("6/8"));
  CHECK_FALSE(Rational::is_canonical_text("3/1"));
  CHECK_FALSE(Rational::is_canonical_text("+3"));
  CHECK_FALSE(Rational::is_canonical_text("3/-4"));
  CHECK_FALSE(Rational::is_canonical_text("0/5"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("dyadic flooring and approximations") {
  CHECK(sp16::floor_to_dyadic(Rational(1, 3), 4) == Rational(5, 16));
  CHECK(sp16::floor_to_dyadic(Rational(-1, 3), 4) == Rational(-6, 16));
  CHECK(sp16::floor_to_dyadic(Rational(3, 8), 4) == Rational(3, 8));
  CHECK(sp16::approx_string(Rational(9, 7)) == "1.28571");
  CHECK(sp16::approx_string(Rational(2, 7)) == "0.285714");
}

TEST_CASE("equal values hash equally") {
  CHECK(Rational(2, 4).hash() == Rational(1, 2).hash());
}
