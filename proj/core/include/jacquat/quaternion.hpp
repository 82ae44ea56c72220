#pragma once

/**
 * @file quaternion.hpp
 * @brief Generalized quaternions over H(alpha,beta) with an exact commutative
 *        coefficient scalar (Rational or Eisenstein).
 *
 * The quaternionic units satisfy
 *   e1^2 = -alpha,  e2^2 = -beta,  e3^2 = -alpha*beta,
 *   e1 e2 = e3 = -e2 e1,  e2 e3 = beta e1 = -e3 e2,  e3 e1 = alpha e2 = -e1 e3,
 * and the product below is the bilinear extension of that table. The signed
 * norm form N(q) = r^2 + alpha i^2 + beta j^2 + alpha beta k^2 satisfies
 * q * conj(q) = N(q) * 1; it is not positive in the split and degenerate
 * algebras, so zero divisors are legal values and only inversion can fail.
 */

#include <array>
#include <concepts>
#include <string>
#include <type_traits>
#include <utility>

#include "jacquat/algebra.hpp"
#include "jacquat/eisenstein.hpp"
#include "jacquat/errors.hpp"
#include "jacquat/rational.hpp"

namespace jacquat {

template <typename S>
concept CoefficientScalar = requires(const S x, const S y) {
  { x + y } -> std::convertible_to<S>;
  { x - y } -> std::convertible_to<S>;
  { x * y } -> std::convertible_to<S>;
  { -x } -> std::convertible_to<S>;
  { x == y } -> std::convertible_to<bool>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.inverse() } -> std::convertible_to<S>;
  { x.str() } -> std::convertible_to<std::string>;
  requires std::constructible_from<S, Rational>;
};

enum class NormMode { Signed, Absolute };

template <CoefficientScalar S>
class Quaternion {
 public:
  Quaternion(AlgebraParams params, S r, S i, S j, S k)
      : params_(std::move(params)),
        r_(std::move(r)),
        i_(std::move(i)),
        j_(std::move(j)),
        k_(std::move(k)) {}

  static Quaternion zero(AlgebraParams params) {
    return from_scalar(std::move(params), S(Rational(0)));
  }
  static Quaternion from_scalar(AlgebraParams params, S r) {
    const S z{Rational(0)};
    return Quaternion(std::move(params), std::move(r), z, z, z);
  }
  /// axis 0..3 -> 1, e1, e2, e3.
  static Quaternion unit(AlgebraParams params, int axis) {
    const S z{Rational(0)}, o{Rational(1)};
    switch (axis) {
      case 0: return Quaternion(std::move(params), o, z, z, z);
      case 1: return Quaternion(std::move(params), z, o, z, z);
      case 2: return Quaternion(std::move(params), z, z, o, z);
      case 3: return Quaternion(std::move(params), z, z, z, o);
      default: throw DomainError("quaternion unit axis out of range");
    }
  }

  const AlgebraParams& params() const { return params_; }
  const S& r() const { return r_; }
  const S& i() const { return i_; }
  const S& j() const { return j_; }
  const S& k() const { return k_; }

  const S& scalar_part() const { return r_; }
  Quaternion vector_part() const {
    return Quaternion(params_, S(Rational(0)), i_, j_, k_);
  }

  bool is_zero() const {
    return r_.is_zero() && i_.is_zero() && j_.is_zero() && k_.is_zero();
  }

  Quaternion conj() const { return Quaternion(params_, r_, -i_, -j_, -k_); }

  Quaternion scale(const S& c) const {
    return Quaternion(params_, c * r_, c * i_, c * j_, c * k_);
  }

  /// N(q) = r^2 + alpha i^2 + beta j^2 + alpha beta k^2 (no absolute value).
  S signed_norm() const {
    const S alpha{params_.alpha}, beta{params_.beta};
    return r_ * r_ + alpha * (i_ * i_) + beta * (j_ * j_) + alpha * beta * (k_ * k_);
  }

  /// Nr(q) = |N(q)|; defined for rational coefficients only.
  Rational abs_norm() const {
    if constexpr (std::is_same_v<S, Rational>) {
      return signed_norm().abs();
    } else {
      throw UnsupportedModeError("absolute norm is undefined for cyclotomic coefficients");
    }
  }

  S norm(NormMode mode) const {
    if (mode == NormMode::Signed) return signed_norm();
    if constexpr (std::is_same_v<S, Rational>) {
      return abs_norm();
    } else {
      throw UnsupportedModeError("absolute norm is undefined for cyclotomic coefficients");
    }
  }

  /// conj(q) / N(q); throws NotInvertibleError when N(q) = 0.
  Quaternion inverse() const {
    const S n = signed_norm();
    if (n.is_zero())
      throw NotInvertibleError("quaternion with zero norm form has no inverse");
    return conj().scale(n.inverse());
  }

  Quaternion operator-() const { return Quaternion(params_, -r_, -i_, -j_, -k_); }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    require_same_algebra(p, q);
    return Quaternion(p.params_, p.r_ + q.r_, p.i_ + q.i_, p.j_ + q.j_, p.k_ + q.k_);
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    require_same_algebra(p, q);
    return Quaternion(p.params_, p.r_ - q.r_, p.i_ - q.i_, p.j_ - q.j_, p.k_ - q.k_);
  }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    require_same_algebra(p, q);
    const S alpha{p.params_.alpha}, beta{p.params_.beta};
    return Quaternion(
        p.params_,
        p.r_ * q.r_ - alpha * (p.i_ * q.i_) - beta * (p.j_ * q.j_) -
            alpha * beta * (p.k_ * q.k_),
        p.r_ * q.i_ + p.i_ * q.r_ + beta * (p.j_ * q.k_ - p.k_ * q.j_),
        p.r_ * q.j_ + p.j_ * q.r_ + alpha * (p.k_ * q.i_ - p.i_ * q.k_),
        p.r_ * q.k_ + p.k_ * q.r_ + (p.i_ * q.j_ - p.j_ * q.i_));
  }

  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  /// Structural equality within one algebra; values of different algebras
  /// are never equal.
  friend bool operator==(const Quaternion& p, const Quaternion& q) {
    return same_algebra(p.params_, q.params_) && p.r_ == q.r_ && p.i_ == q.i_ &&
           p.j_ == q.j_ && p.k_ == q.k_;
  }

  /// "(r, i, j, k)" with exact component text.
  std::string str() const {
    return "(" + r_.str() + ", " + i_.str() + ", " + j_.str() + ", " + k_.str() + ")";
  }

 private:
  static void require_same_algebra(const Quaternion& p, const Quaternion& q) {
    if (!same_algebra(p.params_, q.params_))
      throw AlgebraMismatchError("operands live in different algebras: " +
                                 p.params_.label() + " vs " + q.params_.label());
  }

  AlgebraParams params_;
  S r_, i_, j_, k_;
};

using QuaternionR = Quaternion<Rational>;
using QuaternionE = Quaternion<Eisenstein>;

/// Bilinear form on vector parts: h(u,v) = alpha u1 v1 + beta u2 v2 + alpha beta u3 v3.
template <CoefficientScalar S>
S vector_h(const Quaternion<S>& p, const Quaternion<S>& q) {
  if (!same_algebra(p.params(), q.params()))
    throw AlgebraMismatchError("vector_h operands live in different algebras");
  const S alpha{p.params().alpha}, beta{p.params().beta};
  return alpha * (p.i() * q.i()) + beta * (p.j() * q.j()) +
         alpha * beta * (p.k() * q.k());
}

/// Vector cross product derived from the unit table:
///   u x v = beta(u2 v3 - u3 v2) e1 + alpha(u3 v1 - u1 v3) e2 + (u1 v2 - u2 v1) e3.
template <CoefficientScalar S>
Quaternion<S> vector_cross(const Quaternion<S>& p, const Quaternion<S>& q) {
  if (!same_algebra(p.params(), q.params()))
    throw AlgebraMismatchError("vector_cross operands live in different algebras");
  const S alpha{p.params().alpha}, beta{p.params().beta};
  return Quaternion<S>(p.params(), S(Rational(0)),
                       beta * (p.j() * q.k() - p.k() * q.j()),
                       alpha * (p.k() * q.i() - p.i() * q.k()),
                       p.i() * q.j() - p.j() * q.i());
}

inline QuaternionE to_eisenstein(const QuaternionR& q) {
  return QuaternionE(q.params(), Eisenstein(q.r()), Eisenstein(q.i()),
                     Eisenstein(q.j()), Eisenstein(q.k()));
}

/// Certifies every component rational; throws NonRealCyclotomicError otherwise.
inline QuaternionR certify_rational(const QuaternionE& q) {
  return QuaternionR(q.params(), q.r().to_rational(), q.i().to_rational(),
                     q.j().to_rational(), q.k().to_rational());
}

}  // namespace jacquat
