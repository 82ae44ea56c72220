#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jacquat/quaternion.hpp>

#include <vector>

#include "support/random_gen.hpp"

using namespace jacquat;

namespace {

QuaternionR Q(const AlgebraParams& p, long r, long i, long j, long k) {
  return QuaternionR(p, Rational(r), Rational(i), Rational(j), Rational(k));
}

std::vector<AlgebraParams> test_algebras(int random_count) {
  std::vector<AlgebraParams> out = AlgebraParams::presets();
  testgen::SplitMix gen(7);
  for (int i = 0; i < random_count; ++i) out.push_back(gen.params());
  return out;
}

}  // namespace

TEST_CASE("preset parameters") {
  CHECK(AlgebraParams::real().alpha == Rational(1));
  CHECK(AlgebraParams::real().beta == Rational(1));
  CHECK(AlgebraParams::split().beta == Rational(-1));
  CHECK(AlgebraParams::semi().beta == Rational(0));
  CHECK(AlgebraParams::split_semi().alpha == Rational(-1));
  CHECK(AlgebraParams::quarter().alpha == Rational(0));
  CHECK(AlgebraParams::from_preset("split-semi") == AlgebraParams::split_semi());
  CHECK(AlgebraParams::from_preset("split_semi") == AlgebraParams::split_semi());
  CHECK_FALSE(AlgebraParams::from_preset("octonion").has_value());
  CHECK(AlgebraParams::custom(Rational(1), Rational(-1)).preset_name == "split");
}

TEST_CASE("unit table closure on every algebra") {
  for (const auto& p : test_algebras(20)) {
    const Rational a = p.alpha, b = p.beta;
    const auto e = [&](int axis) { return QuaternionR::unit(p, axis); };
    const auto scalar = [&](const Rational& v) { return QuaternionR::from_scalar(p, v); };
    // squares
    CHECK(e(1) * e(1) == scalar(-a));
    CHECK(e(2) * e(2) == scalar(-b));
    CHECK(e(3) * e(3) == scalar(-(a * b)));
    // products and anticommutation
    CHECK(e(1) * e(2) == e(3));
    CHECK(e(2) * e(1) == -e(3));
    CHECK(e(2) * e(3) == e(1).scale(b));
    CHECK(e(3) * e(2) == -(e(1).scale(b)));
    CHECK(e(3) * e(1) == e(2).scale(a));
    CHECK(e(1) * e(3) == -(e(2).scale(a)));
    // identity row and column
    for (int axis = 0; axis < 4; ++axis) {
      CHECK(e(0) * e(axis) == e(axis));
      CHECK(e(axis) * e(0) == e(axis));
    }
  }
}

TEST_CASE("linear operations") {
  const auto p = AlgebraParams::real();
  CHECK(Q(p, 0, 1, 1, 2) + Q(p, 2, 1, 5, 10) == Q(p, 2, 2, 6, 12));
  const QuaternionR q = Q(p, 3, -1, 4, 1);
  CHECK(q - q == QuaternionR::zero(p));
  CHECK(Q(p, 1, 0, -1, 2).scale(Rational(3)) == Q(p, 3, 0, -3, 6));
  CHECK_THROWS_AS(Q(AlgebraParams::real(), 1, 0, 0, 0) +
                      Q(AlgebraParams::split(), 1, 0, 0, 0),
                  AlgebraMismatchError);
}

TEST_CASE("products in specific algebras") {
  const auto split = AlgebraParams::split();
  CHECK(Q(split, 0, 0, 1, 0) * Q(split, 0, 0, 1, 0) == Q(split, 1, 0, 0, 0));
  const auto real = AlgebraParams::real();
  CHECK(Q(real, 1, 2, 5, 9) * Q(real, 0, 1, 1, 2) == Q(real, -25, 2, 6, -1));
  const auto quarter = AlgebraParams::quarter();
  CHECK(Q(quarter, 0, 1, 0, 0) * Q(quarter, 0, 1, 0, 0) == QuaternionR::zero(quarter));
  CHECK_THROWS_AS(Q(real, 1, 0, 0, 0) * Q(split, 1, 0, 0, 0), AlgebraMismatchError);
}

TEST_CASE("conjugation laws") {
  const auto real = AlgebraParams::real();
  CHECK(Q(real, 0, 1, 1, 2).conj() == Q(real, 0, -1, -1, -2));
  const QuaternionR pq = Q(real, 1, 2, 5, 9);
  const QuaternionR qq = Q(real, 0, 1, 1, 2);
  CHECK(pq.conj().conj() == pq);
  CHECK((pq * qq).conj() == qq.conj() * pq.conj());
}

TEST_CASE("norms") {
  const auto real = AlgebraParams::real();
  CHECK(Q(real, 0, 1, 1, 2).signed_norm() == Rational(6));
  CHECK(Q(real, 1, 0, 0, 0).abs_norm() == Rational(1));
  const auto split = AlgebraParams::split();
  CHECK(Q(split, 1, 0, 1, 0).signed_norm() == Rational(0));
  CHECK(Q(split, 0, 0, 1, 1).norm(NormMode::Signed) == Rational(-2));
  CHECK(Q(split, 0, 0, 1, 1).norm(NormMode::Absolute) == Rational(2));
  const QuaternionE eq(real, Eisenstein::omega(), Eisenstein(Rational(1)),
                       Eisenstein(Rational(0)), Eisenstein(Rational(0)));
  CHECK_THROWS_AS(eq.abs_norm(), UnsupportedModeError);
  CHECK_THROWS_AS(eq.norm(NormMode::Absolute), UnsupportedModeError);
  CHECK_NOTHROW(eq.norm(NormMode::Signed));
}

TEST_CASE("inverses") {
  const auto real = AlgebraParams::real();
  CHECK(Q(real, 0, 1, 0, 0).inverse() == Q(real, 0, -1, 0, 0));
  CHECK(Q(real, 2, 0, 0, 0).inverse() ==
        QuaternionR::from_scalar(real, Rational(1, 2)));
  const auto split = AlgebraParams::split();
  CHECK_THROWS_AS(Q(split, 1, 0, 1, 0).inverse(), NotInvertibleError);
  CHECK_THROWS_AS(QuaternionR::zero(real).inverse(), NotInvertibleError);
}

TEST_CASE("scalar/vector decomposition examples") {
  const auto real = AlgebraParams::real();
  const QuaternionR u = Q(real, 0, 1, 0, 0), v = Q(real, 0, 1, 0, 0);
  CHECK(vector_h(u, v) == Rational(1));
  CHECK(vector_cross(u, v) == QuaternionR::zero(real));
  const auto split = AlgebraParams::split();
  CHECK(vector_h(Q(split, 0, 0, 1, 0), Q(split, 0, 0, 1, 0)) == Rational(-1));
  CHECK(vector_cross(Q(real, 0, 1, 2, 3), Q(real, 0, 3, 2, 1)) ==
        Q(real, 0, -4, 8, -4));
}

TEST_CASE("randomized algebra laws on every preset and random parameters") {
  for (const auto& p : test_algebras(10)) {
    testgen::SplitMix gen(101);
    for (int i = 0; i < 500; ++i) {
      const QuaternionR x = gen.quaternion(p), y = gen.quaternion(p),
                        z = gen.quaternion(p);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x * y).signed_norm() == x.signed_norm() * y.signed_norm());
      CHECK((x * y).conj() == y.conj() * x.conj());
      CHECK((x + y).conj() == x.conj() + y.conj());
      CHECK(x.conj().conj() == x);
      // q * conj(q) collapses to the norm form times one
      CHECK(x * x.conj() == QuaternionR::from_scalar(p, x.signed_norm()));
      // scalar/vector product decomposition
      const QuaternionR expected =
          QuaternionR::from_scalar(p, x.r() * y.r() -
                                          vector_h(x.vector_part(), y.vector_part())) +
          y.vector_part().scale(x.r()) + x.vector_part().scale(y.r()) +
          vector_cross(x.vector_part(), y.vector_part());
      CHECK(x * y == expected);
    }
  }
}

TEST_CASE("inverse law on invertible pairs") {
  for (const auto& p : test_algebras(6)) {
    testgen::SplitMix gen(131);
    int used = 0;
    for (int i = 0; i < 400 && used < 120; ++i) {
      const QuaternionR x = gen.quaternion(p), y = gen.quaternion(p);
      if (x.signed_norm().is_zero() || y.signed_norm().is_zero()) continue;
      ++used;
      const QuaternionR one = QuaternionR::unit(p, 0);
      CHECK(x * x.inverse() == one);
      CHECK(x.inverse() * x == one);
      CHECK((x * y).inverse() == y.inverse() * x.inverse());
    }
    CHECK(used > 0);
  }
}

TEST_CASE("cyclotomic-coefficient quaternions multiply consistently") {
  const auto real = AlgebraParams::real();
  testgen::SplitMix gen(151);
  for (int i = 0; i < 100; ++i) {
    const QuaternionR x = gen.quaternion(real), y = gen.quaternion(real);
    // Embedding commutes with multiplication.
    CHECK(to_eisenstein(x) * to_eisenstein(y) == to_eisenstein(x * y));
    CHECK(certify_rational(to_eisenstein(x)) == x);
  }
  const QuaternionE nonreal(real, Eisenstein::omega(), Eisenstein(Rational(0)),
                            Eisenstein(Rational(0)), Eisenstein(Rational(0)));
  CHECK_THROWS_AS(certify_rational(nonreal), NonRealCyclotomicError);
}
