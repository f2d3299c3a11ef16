#include <doctest.h>

#include "dompack/rational.hpp"

using dompack::Rational;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(4, 2).to_fraction_string() == "2/1");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic and ordering") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * 3 == 1);
  CHECK(Rational(7) / Rational(2) == Rational(7, 2));
  CHECK(-Rational(1, 2) < 0);
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("7") == 7);
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-2/3") == Rational(-2, 3));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("harmonic numbers") {
  CHECK(dompack::harmonic(1) == 1);
  CHECK(dompack::harmonic(2) == Rational(3, 2));
  CHECK(dompack::harmonic(4) == Rational(25, 12));
  // H(30) has a 12-digit denominator; exactness matters
  CHECK(dompack::harmonic(30).denominator() == "2329089562800");
}

}
