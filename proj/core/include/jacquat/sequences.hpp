#pragma once

/**
 * @file sequences.hpp
 * @brief Scalar sequences: third-order Jacobsthal J(3), third-order
 *        Jacobsthal-Lucas j(3), the period-3 sequence V(3), the derived U(3),
 *        and the classic second-order Jacobsthal pair.
 *
 * Values are exact rationals rather than integers: the backward extension of
 * the third-order sequences leaves the integers (J(3) at -2 is 1/2), yet
 * several identities reference j(3) at n-3 for small n, so every index must
 * be well-defined. For n >= 0 all values are integers.
 *
 * seq_recurrence is the deliberately naive ground-truth oracle (literal
 * forward iteration from the initial conditions); seq_closed uses the
 * closed forms with binary powering for 2^n; binet_eval evaluates the
 * cyclotomic Binet expressions in exact Eisenstein arithmetic and certifies
 * the result rational.
 */

#include <optional>
#include <string_view>

#include "jacquat/rational.hpp"

namespace jacquat {

enum class SeqKind { J3, JL3, V3, U3, J2, JL2 };

const char* seq_kind_name(SeqKind kind);
std::optional<SeqKind> parse_seq_kind(std::string_view text);

/// n mod 3 in {0,1,2}, correct for negative n.
int mod3(long n);

/// Closed-form value, defined for every integer n.
Rational seq_closed(SeqKind kind, long n);

/// Literal forward iteration from the initial conditions; n >= 0 only
/// (throws DomainError otherwise). Serves as the ground-truth oracle.
Rational seq_recurrence(SeqKind kind, long n);

/// Binet evaluation through Q(w) for J3, JL3, V3; any integer n.
/// Throws NonRealCyclotomicError if the omega part fails to cancel (which
/// would be an implementation bug) and UnsupportedModeError for other kinds.
Rational binet_eval(SeqKind kind, long n);

enum class SumMode { Direct, Closed };

/// Partial sum of J3 or JL3 over k = 0..n. Direct = term-by-term;
/// Closed = the case-split closed formula. n >= 0.
Rational seq_sum(SeqKind kind, long n, SumMode mode);

}  // namespace jacquat
