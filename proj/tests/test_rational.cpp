#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jacquat/rational.hpp>

#include "support/random_gen.hpp"

using jacquat::DomainError;
using jacquat::Rational;

TEST_CASE("construction reduces to canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(3, -6).den() == 2);  // denominator stays positive
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("equality is structural on canonical form") {
  CHECK(Rational(10, 15) == Rational(2, 3));
  CHECK(Rational(1, 3) != Rational(2, 3));
  CHECK(Rational(7, 1).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
}

TEST_CASE("string round trip") {
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK(Rational(-22, 7).str() == "-22/7");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("22/7") == Rational(22, 7));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("x/y"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
}

TEST_CASE("powers of two at any exponent") {
  CHECK(Rational::pow2(0) == Rational(1));
  CHECK(Rational::pow2(10) == Rational(1024));
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(Rational::pow2(65) == Rational::pow2(64) * Rational(2));
}

TEST_CASE("general powers and inverses") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(-1, 2).inverse() == Rational(-2));
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
  CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 3) > Rational(2));
}

TEST_CASE("field axioms on random values") {
  testgen::SplitMix gen(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}
