#include "jacquat/quatseq.hpp"

#include <array>

#include "jacquat/errors.hpp"

namespace jacquat {

namespace {

QuaternionR seq_window(const AlgebraParams& params, SeqKind kind, long n) {
  return QuaternionR(params, seq_closed(kind, n), seq_closed(kind, n + 1),
                     seq_closed(kind, n + 2), seq_closed(kind, n + 3));
}

}  // namespace

const char* quatseq_kind_name(QuatSeqKind kind) {
  switch (kind) {
    case QuatSeqKind::JQ: return "JQ";
    case QuatSeqKind::JLQ: return "jQ";
    case QuatSeqKind::VQ: return "VQ";
    case QuatSeqKind::UQ: return "UQ";
  }
  return "?";
}

std::optional<QuatSeqKind> parse_quatseq_kind(std::string_view text) {
  if (text == "JQ") return QuatSeqKind::JQ;
  if (text == "jQ" || text == "JLQ" || text == "jq") return QuatSeqKind::JLQ;
  if (text == "VQ") return QuatSeqKind::VQ;
  if (text == "UQ") return QuatSeqKind::UQ;
  return std::nullopt;
}

QuaternionR jq3(const AlgebraParams& params, long n) {
  return seq_window(params, SeqKind::J3, n);
}

QuaternionR jlq3(const AlgebraParams& params, long n) {
  return seq_window(params, SeqKind::JL3, n);
}

QuaternionR vq3(const AlgebraParams& params, long n) {
  static constexpr std::array<std::array<long, 4>, 3> kTable = {{
      {2, -3, 1, 2},   // n = 0 (mod 3)
      {-3, 1, 2, -3},  // n = 1 (mod 3)
      {1, 2, -3, 1},   // n = 2 (mod 3)
  }};
  const auto& row = kTable[static_cast<size_t>(mod3(n))];
  return QuaternionR(params, Rational(row[0]), Rational(row[1]), Rational(row[2]),
                     Rational(row[3]));
}

QuaternionR vq3_closed(const AlgebraParams& params, long n) {
  const Eisenstein w = Eisenstein::omega();
  const Eisenstein w2 = w.conj();
  const Eisenstein a = Eisenstein(Rational(-3)) - Eisenstein(Rational(2)) * w2;
  const Eisenstein b = Eisenstein(Rational(-3)) - Eisenstein(Rational(2)) * w;
  const Eisenstein inv_delta = (w - w2).inverse();
  const HatConstants hats = hat_constants(params);
  const QuaternionE val =
      (hats.hat_omega1.scale(a * w.pow(n)) - hats.hat_omega2.scale(b * w2.pow(n)))
          .scale(inv_delta);
  return certify_rational(val);
}

QuaternionR uq3(const AlgebraParams& params, long n) {
  return jlq3(params, n - 1) - jq3(params, n + 1);
}

QuaternionR quatseq_value(QuatSeqKind kind, const AlgebraParams& params, long n) {
  switch (kind) {
    case QuatSeqKind::JQ: return jq3(params, n);
    case QuatSeqKind::JLQ: return jlq3(params, n);
    case QuatSeqKind::VQ: return vq3(params, n);
    case QuatSeqKind::UQ: return uq3(params, n);
  }
  throw DomainError("unknown quaternion sequence kind");
}

HatConstants hat_constants(const AlgebraParams& params) {
  const Eisenstein w = Eisenstein::omega();
  const Eisenstein w2 = w.conj();
  const Eisenstein one(Rational(1));
  return HatConstants{
      QuaternionR(params, Rational(1), Rational(2), Rational(4), Rational(8)),
      QuaternionE(params, one, w, w.pow(2), one),
      QuaternionE(params, one, w2, w2.pow(2), one),
  };
}

QuaternionR quat_binet(const AlgebraParams& params, long n, QuatSeqKind which) {
  const QuaternionR hat2 = hat_constants(params).hat2;
  const QuaternionR vq = vq3(params, n);
  const Rational seventh(1, 7);
  switch (which) {
    case QuatSeqKind::JQ:
      return (hat2.scale(Rational::pow2(n + 1)) - vq).scale(seventh);
    case QuatSeqKind::JLQ:
      return (hat2.scale(Rational::pow2(n + 3)) + vq.scale(Rational(3))).scale(seventh);
    default:
      throw UnsupportedModeError("quaternion Binet forms exist for JQ and jQ only");
  }
}

}  // namespace jacquat
