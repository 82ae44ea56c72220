#pragma once

/**
 * @file eisenstein.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(w), w a primitive cube
 *        root of unity.
 *
 * Elements are kept on the basis {1, w} with the reduction w^2 = -1 - w.
 * Conjugation swaps the two cube roots: conj(a + b w) = (a - b) - b w, and
 * x * conj(x) = a^2 - a b + b^2 is a nonnegative rational, zero iff x = 0.
 */

#include <iosfwd>
#include <string>

#include "jacquat/rational.hpp"

namespace jacquat {

class Eisenstein {
 public:
  Eisenstein() = default;
  Eisenstein(Rational real) : a_(std::move(real)) {}  // NOLINT: rationals embed
  Eisenstein(long real) : a_(real) {}                 // NOLINT
  Eisenstein(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  /// The chosen primitive cube root w. The other root is conj(w) = -1 - w.
  static Eisenstein omega() { return Eisenstein(Rational(0), Rational(1)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// Returns a when b = 0; otherwise throws NonRealCyclotomicError carrying
  /// the printed value.
  Rational to_rational() const;

  Eisenstein conj() const { return Eisenstein(a_ - b_, -b_); }

  /// x * conj(x), always a rational >= 0.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  Eisenstein inverse() const;       // throws DomainError on zero
  Eisenstein pow(long e) const;     // negative e via the inverse

  std::string str() const;

  Eisenstein operator-() const { return Eisenstein(-a_, -b_); }
  friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y);

  Eisenstein& operator+=(const Eisenstein& o) { return *this = *this + o; }
  Eisenstein& operator-=(const Eisenstein& o) { return *this = *this - o; }
  Eisenstein& operator*=(const Eisenstein& o) { return *this = *this * o; }

  friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Eisenstein& x);

 private:
  Rational a_;  // value is a + b*w
  Rational b_;
};

}  // namespace jacquat
