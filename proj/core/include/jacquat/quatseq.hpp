#pragma once

/**
 * @file quatseq.hpp
 * @brief Quaternion-valued sequences over H(alpha,beta): JQ(3), jQ(3), the
 *        period-3 VQ(3), the derived UQ(3), the hat constants, and the
 *        quaternion Binet evaluator.
 *
 * JQ(3)_n has components (J_n, J_{n+1}, J_{n+2}, J_{n+3}) of the underlying
 * scalar sequence, likewise jQ(3). VQ(3) is stored as a period-3 table; its
 * cyclotomic closed expression is available separately so tests can verify
 * the table against it. UQ(3) is always computed from its defining
 * difference jQ_{n-1} - JQ_{n+1}, never tabulated.
 */

#include "jacquat/algebra.hpp"
#include "jacquat/quaternion.hpp"
#include "jacquat/sequences.hpp"

namespace jacquat {

enum class QuatSeqKind { JQ, JLQ, VQ, UQ };

const char* quatseq_kind_name(QuatSeqKind kind);
std::optional<QuatSeqKind> parse_quatseq_kind(std::string_view text);

/// Third-order Jacobsthal quaternion JQ(3)_n; any integer n (negative n uses
/// the rational closed forms and may have non-integral components).
QuaternionR jq3(const AlgebraParams& params, long n);

/// Third-order Jacobsthal-Lucas quaternion jQ(3)_n.
QuaternionR jlq3(const AlgebraParams& params, long n);

/// Period-3 quaternion VQ(3)_n by table lookup on n mod 3.
QuaternionR vq3(const AlgebraParams& params, long n);

/// VQ(3)_n through the cyclotomic expression
/// (A w1^n w1hat - B w2^n w2hat)/(w1 - w2), certified rational.
QuaternionR vq3_closed(const AlgebraParams& params, long n);

/// UQ(3)_n = jQ(3)_{n-1} - JQ(3)_{n+1}.
QuaternionR uq3(const AlgebraParams& params, long n);

QuaternionR quatseq_value(QuatSeqKind kind, const AlgebraParams& params, long n);

struct HatConstants {
  QuaternionR hat2;        // 1 + 2 e1 + 4 e2 + 8 e3
  QuaternionE hat_omega1;  // 1 + w1 e1 + w1^2 e2 + e3
  QuaternionE hat_omega2;  // 1 + w2 e1 + w2^2 e2 + e3
};

HatConstants hat_constants(const AlgebraParams& params);

/// Quaternion Binet forms: JQ(3)_n = (2^(n+1) hat2 - VQ_n)/7 and
/// jQ(3)_n = (2^(n+3) hat2 + 3 VQ_n)/7. Stated for n >= 0; other kinds throw.
QuaternionR quat_binet(const AlgebraParams& params, long n, QuatSeqKind which);

}  // namespace jacquat
