#include "jacquat/eisenstein.hpp"

#include <ostream>

namespace jacquat {

Rational Eisenstein::to_rational() const {
  if (!b_.is_zero()) throw NonRealCyclotomicError(str());
  return a_;
}

Eisenstein Eisenstein::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero cyclotomic value");
  const Rational n = norm();
  const Eisenstein c = conj();
  return Eisenstein(c.a_ / n, c.b_ / n);
}

Eisenstein Eisenstein::pow(long e) const {
  if (e == 0) return Eisenstein(Rational(1));
  Eisenstein base = e > 0 ? *this : inverse();
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Eisenstein acc(Rational(1));
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
  // (a1 + b1 w)(a2 + b2 w) with w^2 -> -1 - w
  const Rational cross = x.b_ * y.b_;
  return Eisenstein(x.a_ * y.a_ - cross, x.a_ * y.b_ + x.b_ * y.a_ - cross);
}

std::string Eisenstein::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out;
  if (!a_.is_zero()) out = a_.str();
  if (b_ == Rational(1)) {
    out += out.empty() ? "w" : "+w";
  } else if (b_ == Rational(-1)) {
    out += "-w";
  } else {
    if (!out.empty() && !b_.is_negative()) out += "+";
    out += b_.str() + "*w";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& x) {
  return os << x.str();
}

}  // namespace jacquat
