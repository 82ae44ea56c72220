#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision exact rationals in canonical form.
 *
 * Canonical form: gcd(|num|, den) = 1 and den >= 1, restored after every
 * operation, so equality is structural. Backed by GMP's mpq layer behind
 * this interface; nothing in the library touches floating point.
 */

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "jacquat/errors.hpp"

namespace jacquat {

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT: integers embed
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& n) : q_(n) {}

  /// Parses "p" or "p/q" in base 10. Throws DomainError on malformed text.
  static Rational parse(std::string_view text);

  /// 2^e for any integer e, as an exact rational.
  static Rational pow2(long e);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_negative() const { return sgn(q_) < 0; }
  int sign() const { return sgn(q_); }

  Rational abs() const;
  Rational inverse() const;  // throws DomainError on zero
  Rational pow(long e) const;  // throws DomainError on 0^negative

  /// "p" when integral, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;  // invariant: canonical (GMP ops preserve canonical inputs)
};

}  // namespace jacquat
