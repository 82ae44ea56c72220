#include "jacquat/sequences.hpp"

#include <array>

#include "jacquat/eisenstein.hpp"
#include "jacquat/errors.hpp"

namespace jacquat {

namespace {

constexpr std::array<long, 3> kV3Table = {2, -3, 1};
constexpr std::array<long, 3> kU3Table = {0, 1, -1};

Rational third_order_closed(long n, bool lucas) {
  // J(3)_n = (2^(n+1) - V_n)/7,  j(3)_n = (2^(n+3) + 3 V_n)/7
  const Rational v(kV3Table[static_cast<size_t>(mod3(n))]);
  const Rational seven(7);
  if (lucas) return (Rational::pow2(n + 3) + Rational(3) * v) / seven;
  return (Rational::pow2(n + 1) - v) / seven;
}

Rational second_order_closed(long n, bool lucas) {
  // J_n = (2^n - (-1)^n)/3,  j_n = 2^n + (-1)^n
  const Rational sign((n % 2 == 0) ? 1 : -1);
  if (lucas) return Rational::pow2(n) + sign;
  return (Rational::pow2(n) - sign) / Rational(3);
}

Rational third_order_recurrence(long n, bool lucas) {
  // x_{k+3} = x_{k+2} + x_{k+1} + 2 x_k
  Rational a = lucas ? Rational(2) : Rational(0);
  Rational b(1);
  Rational c = lucas ? Rational(5) : Rational(1);
  if (n == 0) return a;
  if (n == 1) return b;
  if (n == 2) return c;
  for (long k = 3; k <= n; ++k) {
    Rational next = c + b + Rational(2) * a;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return c;
}

Rational second_order_recurrence(long n, bool lucas) {
  // x_{k+1} = x_k + 2 x_{k-1}
  Rational a = lucas ? Rational(2) : Rational(0);
  Rational b(1);
  if (n == 0) return a;
  for (long k = 2; k <= n; ++k) {
    Rational next = b + Rational(2) * a;
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

Rational v3_recurrence(long n) {
  // V_{k+2} = -V_{k+1} - V_k from V_0 = 2, V_1 = -3
  Rational a(2), b(-3);
  if (n == 0) return a;
  if (n == 1) return b;
  for (long k = 2; k <= n; ++k) {
    Rational next = -b - a;
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

}  // namespace

int mod3(long n) {
  return static_cast<int>(((n % 3) + 3) % 3);
}

const char* seq_kind_name(SeqKind kind) {
  switch (kind) {
    case SeqKind::J3: return "J3";
    case SeqKind::JL3: return "JL3";
    case SeqKind::V3: return "V3";
    case SeqKind::U3: return "U3";
    case SeqKind::J2: return "J2";
    case SeqKind::JL2: return "JL2";
  }
  return "?";
}

std::optional<SeqKind> parse_seq_kind(std::string_view text) {
  if (text == "J3") return SeqKind::J3;
  if (text == "JL3" || text == "j3") return SeqKind::JL3;
  if (text == "V3") return SeqKind::V3;
  if (text == "U3") return SeqKind::U3;
  if (text == "J2") return SeqKind::J2;
  if (text == "JL2" || text == "j2") return SeqKind::JL2;
  return std::nullopt;
}

Rational seq_closed(SeqKind kind, long n) {
  switch (kind) {
    case SeqKind::J3: return third_order_closed(n, false);
    case SeqKind::JL3: return third_order_closed(n, true);
    case SeqKind::V3: return Rational(kV3Table[static_cast<size_t>(mod3(n))]);
    case SeqKind::U3: return Rational(kU3Table[static_cast<size_t>(mod3(n))]);
    case SeqKind::J2: return second_order_closed(n, false);
    case SeqKind::JL2: return second_order_closed(n, true);
  }
  throw DomainError("unknown sequence kind");
}

Rational seq_recurrence(SeqKind kind, long n) {
  if (n < 0)
    throw DomainError("recurrence evaluation requires n >= 0 (use the closed form)");
  switch (kind) {
    case SeqKind::J3: return third_order_recurrence(n, false);
    case SeqKind::JL3: return third_order_recurrence(n, true);
    case SeqKind::V3: return v3_recurrence(n);
    case SeqKind::U3:
      // U_n = j(3)_{n-1} - J(3)_{n+1} has period 3; shift by one period so
      // every consumed index is nonnegative.
      return third_order_recurrence(n + 2, true) - third_order_recurrence(n + 4, false);
    case SeqKind::J2: return second_order_recurrence(n, false);
    case SeqKind::JL2: return second_order_recurrence(n, true);
  }
  throw DomainError("unknown sequence kind");
}

Rational binet_eval(SeqKind kind, long n) {
  // Roots of x^3 - x^2 - x - 2: 2 and the primitive cube roots w1, w2.
  // On the {1, w} basis: w1 = w, w2 = -1 - w, i*sqrt(3) = w1 - w2 = 1 + 2w.
  const Eisenstein w = Eisenstein::omega();
  const Eisenstein w2 = w.conj();
  switch (kind) {
    case SeqKind::J3: {
      // (2/7) 2^n - ((3+2i sqrt3)/21) w1^n - ((3-2i sqrt3)/21) w2^n
      const Eisenstein c1(Rational(5, 21), Rational(4, 21));  // (5+4w)/21
      const Eisenstein c2 = c1.conj();
      const Eisenstein val = Eisenstein(Rational::pow2(n + 1) / Rational(7)) -
                             c1 * w.pow(n) - c2 * w2.pow(n);
      return val.to_rational();
    }
    case SeqKind::JL3: {
      // (8/7) 2^n + ((3+2i sqrt3)/7) w1^n + ((3-2i sqrt3)/7) w2^n
      const Eisenstein c1(Rational(5, 7), Rational(4, 7));  // (5+4w)/7
      const Eisenstein c2 = c1.conj();
      const Eisenstein val = Eisenstein(Rational::pow2(n + 3) / Rational(7)) +
                             c1 * w.pow(n) + c2 * w2.pow(n);
      return val.to_rational();
    }
    case SeqKind::V3: {
      // (A w1^n - B w2^n)/(w1 - w2), A = -3 - 2 w2, B = -3 - 2 w1
      const Eisenstein a = Eisenstein(Rational(-3)) - Eisenstein(Rational(2)) * w2;
      const Eisenstein b = Eisenstein(Rational(-3)) - Eisenstein(Rational(2)) * w;
      const Eisenstein delta = w - w2;
      const Eisenstein val = (a * w.pow(n) - b * w2.pow(n)) * delta.inverse();
      return val.to_rational();
    }
    default:
      throw UnsupportedModeError("Binet evaluation is defined for J3, JL3, V3 only");
  }
}

Rational seq_sum(SeqKind kind, long n, SumMode mode) {
  if (kind != SeqKind::J3 && kind != SeqKind::JL3)
    throw UnsupportedModeError("partial sums are defined for J3 and JL3 only");
  if (n < 0) throw DomainError("partial sum requires n >= 0");
  if (mode == SumMode::Direct) {
    Rational acc(0);
    for (long k = 0; k <= n; ++k) acc += seq_closed(kind, k);
    return acc;
  }
  const Rational next = seq_closed(kind, n + 1);
  if (kind == SeqKind::J3)
    return mod3(n) == 0 ? next - Rational(1) : next;
  return mod3(n) == 0 ? next + Rational(1) : next - Rational(2);
}

}  // namespace jacquat
