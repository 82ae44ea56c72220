#include "jacquat/rational.hpp"

#include <ostream>

namespace jacquat {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0)
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0)
    throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

Rational Rational::abs() const {
  return is_negative() ? -*this : *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e > 0 ? *this : inverse();
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
  return Rational(n, d);  // coprime^k stays coprime; canonicalize is a no-op
}

std::string Rational::str() const {
  return q_.get_str();
}

Rational Rational::operator-() const {
  return Rational(mpq_class(-q_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.q_;
}

}  // namespace jacquat
