#include "doctest.h"
#include "mcorr/rational.hpp"

using mcorr::Rational;

TEST_SUITE("rational") {
  TEST_CASE("parse and print canonical forms") {
    CHECK(Rational::parse("6/-4").str() == "-3/2");
    CHECK(Rational::parse("  -10/4 ").str() == "-5/2");
    CHECK(Rational::parse("42").str() == "42");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK(Rational::parse("-262445/91974960") == Rational::parse("-52489/18394992"));
  }

  TEST_CASE("malformed input throws") {
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  }

  TEST_CASE("arithmetic stays reduced") {
    const Rational a(1, 6), b(1, 3);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "-1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "1/2");
    CHECK((a + b).denominator() == 2);
  }

  TEST_CASE("powers and ordering") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK(Rational(-1, 3) < Rational(-1, 4));
    CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
    CHECK(Rational(3, 4).to_double() == doctest::Approx(0.75));
  }
}
