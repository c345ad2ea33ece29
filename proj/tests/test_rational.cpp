#include <catch_amalgamated.hpp>

#include "lenslab/rational.hpp"

using namespace lenslab;

TEST_CASE("fractions reduce to lowest terms with a positive denominator") {
  CHECK(reduce_fraction(6, 4).value() == Rational(3, 2));
  CHECK(reduce_fraction(-5, -10).value() == Rational(1, 2));
  CHECK(reduce_fraction(9, 7).str() == "9/7");
  CHECK(reduce_fraction(3, 0).is_infinite());
  CHECK(reduce_fraction(-3, 0).str() == "1/0");
  CHECK_THROWS_AS(reduce_fraction(0, 0), InvalidFraction);
  CHECK_THROWS_AS(Rational(1, 0), InvalidFraction);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
  CHECK_THROWS_AS(a / Rational(0), DomainError);
}

TEST_CASE("denominators grow past 64 bits without loss") {
  Rational x(1);
  for (int i = 2; i < 60; ++i) x += Rational(1, i * 1000003);
  Rational y = x;
  for (int i = 2; i < 60; ++i) y -= Rational(1, i * 1000003);
  CHECK(y == Rational(1));
  CHECK(x.den() > Integer(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("parsing and printing") {
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("+5").str() == "5");
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Slope::parse("inf").is_infinite());
  CHECK(Slope::parse("1/0").str() == "1/0");
  CHECK(Slope::parse("7/3").value() == Rational(7, 3));
  CHECK_THROWS_AS(Rational::parse("1/x"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Slope::infinity().value(), DomainError);
}

TEST_CASE("modular helpers") {
  CHECK(mod_inverse(7, 9) == 4);
  CHECK(mod_inverse(1, 1) == 0);
  CHECK_THROWS_AS(mod_inverse(6, 9), DomainError);
  CHECK(mod(std::int64_t{-1}, std::int64_t{9}) == 8);
  CHECK(floor_div(Integer(-1), Integer(2)) == -1);
}
