#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jacquat/eisenstein.hpp>

#include "support/random_gen.hpp"

using jacquat::DomainError;
using jacquat::Eisenstein;
using jacquat::NonRealCyclotomicError;
using jacquat::Rational;

namespace {
const Eisenstein w = Eisenstein::omega();
}

TEST_CASE("defining relation w^2 = -1 - w") {
  CHECK(w * w == Eisenstein(Rational(-1), Rational(-1)));
}

TEST_CASE("(1 + 2w)^2 = -3, the square of i*sqrt(3)") {
  const Eisenstein root(Rational(1), Rational(2));
  CHECK(root * root == Eisenstein(Rational(-3)));
}

TEST_CASE("(-1 + 2w)(-3 - 2w) = 7") {
  const Eisenstein a(Rational(-1), Rational(2));
  const Eisenstein b(Rational(-3), Rational(-2));
  CHECK(a * b == Eisenstein(Rational(7)));
}

TEST_CASE("powers of w cycle with period 3") {
  CHECK(w.pow(3) == Eisenstein(Rational(1)));
  CHECK(w.pow(0) == Eisenstein(Rational(1)));
  CHECK(w.pow(-1) == Eisenstein(Rational(-1), Rational(-1)));
  CHECK(w.pow(2) == w.conj());
  CHECK(w.pow(100) == w.pow(1));
  CHECK(w.pow(-100) == w.pow(2));
}

TEST_CASE("conjugation") {
  CHECK(Eisenstein(Rational(1), Rational(2)).conj() ==
        Eisenstein(Rational(-1), Rational(-2)));
  CHECK(Eisenstein(Rational(5)).conj() == Eisenstein(Rational(5)));
  const Eisenstein x(Rational(3, 2), Rational(-7, 3));
  CHECK(x.conj().conj() == x);
}

TEST_CASE("inverses") {
  CHECK(w.inverse() == Eisenstein(Rational(-1), Rational(-1)));
  CHECK(w.inverse() == w.pow(-1));
  CHECK_THROWS_AS(Eisenstein().inverse(), DomainError);
  CHECK_THROWS_AS(Eisenstein().pow(-2), DomainError);
}

TEST_CASE("rationality certification") {
  CHECK(Eisenstein(Rational(7)).to_rational() == Rational(7));
  const Eisenstein root(Rational(1), Rational(2));
  CHECK((root * root).to_rational() == Rational(-3));
  CHECK(Eisenstein(Rational(1), Rational(1)).is_rational() == false);
  CHECK_THROWS_AS(Eisenstein(Rational(1), Rational(1)).to_rational(),
                  NonRealCyclotomicError);
  try {
    Eisenstein(Rational(1), Rational(1)).to_rational();
  } catch (const NonRealCyclotomicError& e) {
    CHECK(e.value() == "1+w");
  }
}

TEST_CASE("field axioms on random triples") {
  testgen::SplitMix gen(23);
  for (int i = 0; i < 1000; ++i) {
    const Eisenstein x = gen.eisenstein(), y = gen.eisenstein(), z = gen.eisenstein();
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("multiplicative structure on random values") {
  testgen::SplitMix gen(29);
  for (int i = 0; i < 400; ++i) {
    const Eisenstein x = gen.eisenstein(), y = gen.eisenstein();
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.norm() == (x * x.conj()).to_rational());
    CHECK_FALSE(x.norm().is_negative());
    CHECK(x.norm().is_zero() == x.is_zero());
    if (!x.is_zero()) CHECK(x * x.inverse() == Eisenstein(Rational(1)));
  }
}

TEST_CASE("pow is additive in the exponent") {
  testgen::SplitMix gen(31);
  for (int i = 0; i < 200; ++i) {
    Eisenstein x = gen.eisenstein();
    if (x.is_zero()) x = x + Eisenstein(Rational(1));
    const long m = gen.range(-32, 32), n = gen.range(-32, 32);
    CHECK(x.pow(m + n) == x.pow(m) * x.pow(n));
  }
}
