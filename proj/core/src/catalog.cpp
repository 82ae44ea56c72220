#include <cstdio>
#include <utility>

#include "jacquat/errors.hpp"
#include "jacquat/identities.hpp"

// The identity catalog. Each entry's LHS/RHS mirror one printed equality,
// in the printed operand order (the quaternion product is noncommutative,
// so factor order is load-bearing). Entries whose printed form fails exact
// checking carry a ".as_printed" suffix and a ".corrected" sibling with the
// derivation-consistent form.

namespace jacquat {

namespace {

Rational independent_pow2(long e) {
  // Naive repeated multiplication; the fast path uses binary powering.
  Rational acc(1);
  const Rational step = e >= 0 ? Rational(2) : Rational(1, 2);
  const long count = e >= 0 ? e : -e;
  for (long i = 0; i < count; ++i) acc *= step;
  return acc;
}

Rational independent_scalar(SeqKind kind, long idx) {
  switch (kind) {
    case SeqKind::J3:
    case SeqKind::JL3:
    case SeqKind::V3:
      return idx >= 0 ? seq_recurrence(kind, idx) : binet_eval(kind, idx);
    case SeqKind::U3:
      return independent_scalar(SeqKind::JL3, idx - 1) -
             independent_scalar(SeqKind::J3, idx + 1);
    case SeqKind::J2: {
      if (idx >= 0) return seq_recurrence(kind, idx);
      const Rational sign((idx % 2 == 0) ? 1 : -1);
      return (independent_pow2(idx) - sign) / Rational(3);
    }
    case SeqKind::JL2: {
      if (idx >= 0) return seq_recurrence(kind, idx);
      const Rational sign((idx % 2 == 0) ? 1 : -1);
      return independent_pow2(idx) + sign;
    }
  }
  throw DomainError("unknown sequence kind");
}

}  // namespace

const char* variant_name(Variant v) {
  return v == Variant::AsPrinted ? "as_printed" : "corrected";
}

std::string check_value_str(const CheckValue& v) {
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).str();
  return std::get<QuaternionR>(v).str();
}

EvalContext::EvalContext(const AlgebraParams* params, long n, std::optional<long> m,
                         EvalRoute route)
    : params_(params), n_(n), m_(m), route_(route) {}

const AlgebraParams& EvalContext::params() const {
  if (params_ == nullptr)
    throw ParamsOutOfScopeError("identity evaluated without algebra parameters");
  return *params_;
}

Rational EvalContext::scalar(SeqKind kind, long idx) const {
  // V(3) and U(3) are total period-3 sequences; the Jacobsthal families are
  // only printed for n >= 0, so consuming them below zero is flagged.
  if (idx < 0 && kind != SeqKind::V3 && kind != SeqKind::U3) negative_index_ = true;
  if (route_ == EvalRoute::Fast) return seq_closed(kind, idx);
  return independent_scalar(kind, idx);
}

Rational EvalContext::J(long idx) const { return scalar(SeqKind::J3, idx); }
Rational EvalContext::j(long idx) const { return scalar(SeqKind::JL3, idx); }
Rational EvalContext::V(long idx) const { return scalar(SeqKind::V3, idx); }
Rational EvalContext::U(long idx) const { return scalar(SeqKind::U3, idx); }
Rational EvalContext::J2(long idx) const { return scalar(SeqKind::J2, idx); }
Rational EvalContext::j2(long idx) const { return scalar(SeqKind::JL2, idx); }

Rational EvalContext::pow2(long e) const {
  return route_ == EvalRoute::Fast ? Rational::pow2(e) : independent_pow2(e);
}

QuaternionR EvalContext::JQ(long idx) const {
  return QuaternionR(params(), J(idx), J(idx + 1), J(idx + 2), J(idx + 3));
}

QuaternionR EvalContext::jQ(long idx) const {
  return QuaternionR(params(), j(idx), j(idx + 1), j(idx + 2), j(idx + 3));
}

QuaternionR EvalContext::VQ(long idx) const {
  // Independent route bypasses the period-3 table via the cyclotomic form.
  return route_ == EvalRoute::Fast ? vq3(params(), idx) : vq3_closed(params(), idx);
}

QuaternionR EvalContext::UQ(long idx) const { return jQ(idx - 1) - JQ(idx + 1); }

QuaternionR EvalContext::hat2() const { return hat_constants(params()).hat2; }
QuaternionE EvalContext::hat_omega1() const { return hat_constants(params()).hat_omega1; }
QuaternionE EvalContext::hat_omega2() const { return hat_constants(params()).hat_omega2; }

QuaternionR EvalContext::scalar_quat(const Rational& r) const {
  return QuaternionR::from_scalar(params(), r);
}

QuaternionR EvalContext::unit(int axis) const {
  return QuaternionR::unit(params(), axis);
}

namespace {

Variant variant_from_id(const std::string& id, std::string& base_out) {
  constexpr std::string_view kPrinted = ".as_printed";
  constexpr std::string_view kCorrected = ".corrected";
  if (id.size() > kPrinted.size() &&
      id.compare(id.size() - kPrinted.size(), kPrinted.size(), kPrinted) == 0) {
    base_out = id.substr(0, id.size() - kPrinted.size());
    return Variant::AsPrinted;
  }
  if (id.size() > kCorrected.size() &&
      id.compare(id.size() - kCorrected.size(), kCorrected.size(), kCorrected) == 0) {
    base_out = id.substr(0, id.size() - kCorrected.size());
    return Variant::Corrected;
  }
  base_out = id;
  return Variant::AsPrinted;
}

IdentitySpec entry(std::string id, std::string statement, ParamScope scope,
                   std::vector<AlgebraParams> fixed, IndexDomain domain,
                   Evaluator lhs, Evaluator rhs) {
  IdentitySpec s;
  s.id = std::move(id);
  s.variant = variant_from_id(s.id, s.base_id);
  s.statement = std::move(statement);
  s.scope = scope;
  s.fixed_params = std::move(fixed);
  s.domain = domain;
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  return s;
}

IdentitySpec scalar_entry(std::string id, std::string statement, long n_min,
                          Evaluator lhs, Evaluator rhs) {
  return entry(std::move(id), std::move(statement), ParamScope::Scalar, {},
               IndexDomain{n_min, false, {}}, std::move(lhs), std::move(rhs));
}

IdentitySpec scalar_entry_all_n(std::string id, std::string statement, Evaluator lhs,
                                Evaluator rhs) {
  return entry(std::move(id), std::move(statement), ParamScope::Scalar, {},
               IndexDomain{{}, false, {}}, std::move(lhs), std::move(rhs));
}

IdentitySpec universal_entry(std::string id, std::string statement, IndexDomain dom,
                             Evaluator lhs, Evaluator rhs) {
  return entry(std::move(id), std::move(statement), ParamScope::Universal, {}, dom,
               std::move(lhs), std::move(rhs));
}

IdentitySpec fixed_entry(std::string id, std::string statement, AlgebraParams p,
                         IndexDomain dom, Evaluator lhs, Evaluator rhs) {
  return entry(std::move(id), std::move(statement), ParamScope::Fixed, {std::move(p)},
               dom, std::move(lhs), std::move(rhs));
}

Rational branch3(long n, long r0, long r1, long r2) {
  switch (mod3(n)) {
    case 0: return Rational(r0);
    case 1: return Rational(r1);
    default: return Rational(r2);
  }
}

// Shared left sides.

CheckValue eq3_lhs(const EvalContext& c) {
  const long n = c.n();
  const QuaternionR a = c.JQ(n), b = c.JQ(n + 1), d = c.JQ(n + 2);
  return a * a + b * b + d * d;
}

CheckValue eq4_lhs(const EvalContext& c) {
  const QuaternionR jq = c.jQ(c.n()), JQ = c.JQ(c.n());
  return jq * jq - (JQ * JQ).scale(Rational(9));
}

CheckValue p11_lhs(const EvalContext& c) {
  const long n = c.n();
  const QuaternionR b = c.JQ(n + 1);
  return b * b - c.JQ(n + 2) * c.JQ(n);
}

// eq3 right side; `corrected` flips the sign of the 2^(n+2) U-combination,
// which the printed text carries with a dangling "-." coefficient.
Evaluator eq3_rhs(bool corrected) {
  return [corrected](const EvalContext& c) -> CheckValue {
    const long n = c.n();
    const Rational alpha = c.params().alpha, beta = c.params().beta;
    const QuaternionR cross = c.JQ(n).scale(c.J(n)) +
                              c.JQ(n + 1).scale(c.J(n + 1)) +
                              c.JQ(n + 2).scale(c.J(n + 2));
    const Rational weights = Rational(1) + Rational(4) * alpha + Rational(16) * beta +
                             Rational(64) * alpha * beta;
    const Rational ucombo = c.U(n) + Rational(2) * alpha * c.U(n + 1) +
                            Rational(4) * beta * c.U(n + 2) +
                            Rational(8) * alpha * beta * c.U(n + 3);
    const Rational tail = Rational(2) * (Rational(1) + alpha + beta + alpha * beta);
    Rational uterm = c.pow2(n + 2) * ucombo;
    if (!corrected) uterm = -uterm;
    const QuaternionR rhs =
        cross.scale(Rational(14)) -
        c.scalar_quat(Rational(3) * c.pow2(2 * n + 2) * weights) +
        c.scalar_quat(uterm) - c.scalar_quat(tail);
    return rhs.scale(Rational(1, 7));
  };
}

// eq4 preset bullets share the shape 2*(j_n jQ_n - 9 J_n JQ_n + tail).
Evaluator eq4_bullet_rhs(std::function<Rational(const EvalContext&)> tail) {
  return [tail = std::move(tail)](const EvalContext& c) -> CheckValue {
    const long n = c.n();
    const QuaternionR base =
        c.jQ(n).scale(c.j(n)) - c.JQ(n).scale(Rational(9) * c.J(n));
    return (base + c.scalar_quat(tail(c))).scale(Rational(2));
  };
}

// p11 right side with a caller-supplied braces constant.
Evaluator p11_rhs(std::function<QuaternionR(const EvalContext&)> constant) {
  return [constant = std::move(constant)](const EvalContext& c) -> CheckValue {
    const long n = c.n();
    const QuaternionR core =
        (c.hat2() * c.UQ(n + 1)).scale(Rational(2)) - c.UQ(n + 2) * c.hat2();
    return (core.scale(c.pow2(n + 1)) + constant(c)).scale(Rational(1, 7));
  };
}

std::function<QuaternionR(const EvalContext&)> const_quat(long r, long i, long j,
                                                          long k) {
  return [=](const EvalContext& c) {
    return QuaternionR(c.params(), Rational(r), Rational(i), Rational(j), Rational(k));
  };
}

std::vector<IdentitySpec> build_catalog() {
  std::vector<IdentitySpec> cat;
  cat.reserve(64);

  // --- Scalar identities -------------------------------------------------

  cat.push_back(scalar_entry(
      "e1", "J2(n+1) = J2(n) + 2*J2(n-1)", 1,
      [](const EvalContext& c) -> CheckValue { return c.J2(c.n() + 1); },
      [](const EvalContext& c) -> CheckValue {
        return c.J2(c.n()) + Rational(2) * c.J2(c.n() - 1);
      }));
  cat.push_back(scalar_entry(
      "ec1", "jl2(n+1) = jl2(n) + 2*jl2(n-1)", 1,
      [](const EvalContext& c) -> CheckValue { return c.j2(c.n() + 1); },
      [](const EvalContext& c) -> CheckValue {
        return c.j2(c.n()) + Rational(2) * c.j2(c.n() - 1);
      }));
  cat.push_back(scalar_entry(
      "e2", "J3(n+3) = J3(n+2) + J3(n+1) + 2*J3(n)", 0,
      [](const EvalContext& c) -> CheckValue { return c.J(c.n() + 3); },
      [](const EvalContext& c) -> CheckValue {
        return c.J(c.n() + 2) + c.J(c.n() + 1) + Rational(2) * c.J(c.n());
      }));
  cat.push_back(scalar_entry(
      "e3", "jl3(n+3) = jl3(n+2) + jl3(n+1) + 2*jl3(n)", 0,
      [](const EvalContext& c) -> CheckValue { return c.j(c.n() + 3); },
      [](const EvalContext& c) -> CheckValue {
        return c.j(c.n() + 2) + c.j(c.n() + 1) + Rational(2) * c.j(c.n());
      }));
  cat.push_back(scalar_entry(
      "e4", "3*J3(n) + jl3(n) = 2^(n+1)", 0,
      [](const EvalContext& c) -> CheckValue {
        return Rational(3) * c.J(c.n()) + c.j(c.n());
      },
      [](const EvalContext& c) -> CheckValue { return c.pow2(c.n() + 1); }));
  cat.push_back(scalar_entry(
      "e5", "jl3(n) - 3*J3(n) = 2*jl3(n-3)", 0,
      [](const EvalContext& c) -> CheckValue {
        return c.j(c.n()) - Rational(3) * c.J(c.n());
      },
      [](const EvalContext& c) -> CheckValue {
        return Rational(2) * c.j(c.n() - 3);
      }));
  cat.push_back(scalar_entry(
      "ec5", "J3(n+2) - 4*J3(n) = -2 if n=1 (mod 3) else 1", 0,
      [](const EvalContext& c) -> CheckValue {
        return c.J(c.n() + 2) - Rational(4) * c.J(c.n());
      },
      [](const EvalContext& c) -> CheckValue {
        return Rational(mod3(c.n()) == 1 ? -2 : 1);
      }));
  cat.push_back(scalar_entry(
      "e6", "jl3(n) - 4*J3(n) = {2, -3, 1} by n mod 3", 0,
      [](const EvalContext& c) -> CheckValue {
        return c.j(c.n()) - Rational(4) * c.J(c.n());
      },
      [](const EvalContext& c) -> CheckValue { return branch3(c.n(), 2, -3, 1); }));
  cat.push_back(scalar_entry(
      "e7", "jl3(n+1) + jl3(n) = 3*J3(n+2)", 0,
      [](const EvalContext& c) -> CheckValue {
        return c.j(c.n() + 1) + c.j(c.n());
      },
      [](const EvalContext& c) -> CheckValue {
        return Rational(3) * c.J(c.n() + 2);
      }));
  cat.push_back(scalar_entry(
      "e8", "jl3(n) - J3(n+2) = {1, -1, 0} by n mod 3", 0,
      [](const EvalContext& c) -> CheckValue {
        return c.j(c.n()) - c.J(c.n() + 2);
      },
      [](const EvalContext& c) -> CheckValue { return branch3(c.n(), 1, -1, 0); }));
  cat.push_back(scalar_entry(
      "e9", "jl3(n-3)^2 + 3*J3(n)*jl3(n) = 4^n", 0,
      [](const EvalContext& c) -> CheckValue {
        const Rational prev = c.j(c.n() - 3);
        return prev * prev + Rational(3) * c.J(c.n()) * c.j(c.n());
      },
      [](const EvalContext& c) -> CheckValue { return c.pow2(2 * c.n()); }));
  cat.push_back(scalar_entry(
      "e10", "sum J3(0..n) = J3(n+1) - [n=0 (mod 3)]", 0,
      [](const EvalContext& c) -> CheckValue {
        Rational acc(0);
        for (long k = 0; k <= c.n(); ++k) acc += c.J(k);
        return acc;
      },
      [](const EvalContext& c) -> CheckValue {
        const Rational next = c.J(c.n() + 1);
        return mod3(c.n()) == 0 ? next - Rational(1) : next;
      }));
  cat.push_back(scalar_entry(
      "e11", "sum jl3(0..n) = jl3(n+1) + 1 if n=0 (mod 3) else jl3(n+1) - 2", 0,
      [](const EvalContext& c) -> CheckValue {
        Rational acc(0);
        for (long k = 0; k <= c.n(); ++k) acc += c.j(k);
        return acc;
      },
      [](const EvalContext& c) -> CheckValue {
        const Rational next = c.j(c.n() + 1);
        return mod3(c.n()) == 0 ? next + Rational(1) : next - Rational(2);
      }));
  cat.push_back(scalar_entry(
      "e12", "jl3(n)^2 - 9*J3(n)^2 = 2^(n+2)*jl3(n-3)", 0,
      [](const EvalContext& c) -> CheckValue {
        const Rational jn = c.j(c.n()), Jn = c.J(c.n());
        return jn * jn - Rational(9) * Jn * Jn;
      },
      [](const EvalContext& c) -> CheckValue {
        return c.pow2(c.n() + 2) * c.j(c.n() - 3);
      }));
  cat.push_back(scalar_entry(
      "lemma.sumsq", "J3(n)^2 + J3(n+1)^2 + J3(n+2)^2 = (3*2^(2n+2) - 2^(n+2)*U3(n) + 2)/7",
      0,
      [](const EvalContext& c) -> CheckValue {
        const Rational a = c.J(c.n()), b = c.J(c.n() + 1), d = c.J(c.n() + 2);
        return a * a + b * b + d * d;
      },
      [](const EvalContext& c) -> CheckValue {
        return (Rational(3) * c.pow2(2 * c.n() + 2) -
                c.pow2(c.n() + 2) * c.U(c.n()) + Rational(2)) /
               Rational(7);
      }));
  cat.push_back(scalar_entry(
      "v3.rec", "V3(n+2) = -V3(n+1) - V3(n)", 0,
      [](const EvalContext& c) -> CheckValue { return c.V(c.n() + 2); },
      [](const EvalContext& c) -> CheckValue {
        return -(c.V(c.n() + 1)) - c.V(c.n());
      }));
  cat.push_back(scalar_entry_all_n(
      "b1", "J3(n) = (2/7)*2^n - ((3+2i sqrt3)/21)*w1^n - ((3-2i sqrt3)/21)*w2^n",
      [](const EvalContext& c) -> CheckValue { return c.J(c.n()); },
      [](const EvalContext& c) -> CheckValue {
        return binet_eval(SeqKind::J3, c.n());
      }));
  cat.push_back(scalar_entry_all_n(
      "b2", "jl3(n) = (8/7)*2^n + ((3+2i sqrt3)/7)*w1^n + ((3-2i sqrt3)/7)*w2^n",
      [](const EvalContext& c) -> CheckValue { return c.j(c.n()); },
      [](const EvalContext& c) -> CheckValue {
        return binet_eval(SeqKind::JL3, c.n());
      }));
  cat.push_back(scalar_entry_all_n(
      "h1", "V3(n) = (A*w1^n - B*w2^n)/(w1 - w2), A = -3-2w2, B = -3-2w1",
      [](const EvalContext& c) -> CheckValue { return c.V(c.n()); },
      [](const EvalContext& c) -> CheckValue {
        return binet_eval(SeqKind::V3, c.n());
      }));

  // --- Quaternion recurrence and unit-contraction identities -------------

  cat.push_back(universal_entry(
      "eq1", "2*JQ(n) + JQ(n+1) + JQ(n+2) = JQ(n+3)", IndexDomain{0, false, {}},
      [](const EvalContext& c) -> CheckValue {
        return c.JQ(c.n()).scale(Rational(2)) + c.JQ(c.n() + 1) + c.JQ(c.n() + 2);
      },
      [](const EvalContext& c) -> CheckValue { return c.JQ(c.n() + 3); }));

  const auto eq2_lhs = [](const EvalContext& c) -> CheckValue {
    const long n = c.n();
    return c.JQ(n) - c.unit(1) * c.JQ(n + 1) - c.unit(2) * c.JQ(n + 2) -
           c.unit(3) * c.JQ(n + 3);
  };
  cat.push_back(universal_entry(
      "eq2",
      "JQ(n) - e1*JQ(n+1) - e2*JQ(n+2) - e3*JQ(n+3) = "
      "(1+2b+10ab)*J3(n) + (3b+9ab)*J3(n+1) + (a+2b+9ab)*J3(n+2)",
      IndexDomain{0, false, {}}, eq2_lhs,
      [](const EvalContext& c) -> CheckValue {
        const Rational a = c.params().alpha, b = c.params().beta;
        const Rational value =
            (Rational(1) + Rational(2) * b + Rational(10) * a * b) * c.J(c.n()) +
            (Rational(3) * b + Rational(9) * a * b) * c.J(c.n() + 1) +
            (a + Rational(2) * b + Rational(9) * a * b) * c.J(c.n() + 2);
        return c.scalar_quat(value);
      }));
  cat.push_back(fixed_entry(
      "eq2.real", "unit contraction at H(1,1): 37*J3(n) + 12*jl3(n)",
      AlgebraParams::real(), IndexDomain{0, false, {}}, eq2_lhs,
      [](const EvalContext& c) -> CheckValue {
        return c.scalar_quat(Rational(37) * c.J(c.n()) + Rational(12) * c.j(c.n()));
      }));
  cat.push_back(fixed_entry(
      "eq2.split", "unit contraction at H(1,-1): -(J3(n) + 17*J3(n+1) + 5*jl3(n+1))",
      AlgebraParams::split(), IndexDomain{0, false, {}}, eq2_lhs,
      [](const EvalContext& c) -> CheckValue {
        return c.scalar_quat(-(c.J(c.n()) + Rational(17) * c.J(c.n() + 1) +
                               Rational(5) * c.j(c.n() + 1)));
      }));
  cat.push_back(fixed_entry(
      "eq2.semi", "unit contraction at H(1,0): J3(n) + J3(n+2)",
      AlgebraParams::semi(), IndexDomain{0, false, {}}, eq2_lhs,
      [](const EvalContext& c) -> CheckValue {
        return c.scalar_quat(c.J(c.n()) + c.J(c.n() + 2));
      }));
  cat.push_back(fixed_entry(
      "eq2.split_semi", "unit contraction at H(-1,0): J3(n) - J3(n+2)",
      AlgebraParams::split_semi(), IndexDomain{0, false, {}}, eq2_lhs,
      [](const EvalContext& c) -> CheckValue {
        return c.scalar_quat(c.J(c.n()) - c.J(c.n() + 2));
      }));
  cat.push_back(fixed_entry(
      "eq2.quarter", "unit contraction at H(0,0): J3(n)", AlgebraParams::quarter(),
      IndexDomain{0, false, {}}, eq2_lhs,
      [](const EvalContext& c) -> CheckValue { return c.scalar_quat(c.J(c.n())); }));

  // --- Sums of squares (two variants: printed sign vs corrected sign) ----

  cat.push_back(universal_entry(
      "eq3.as_printed",
      "JQ(n)^2 + JQ(n+1)^2 + JQ(n+2)^2 = (1/7)*(14*sum J3*JQ - 3*2^(2n+2)*W "
      "- 2^(n+2)*(U3(n)+2a*U3(n+1)+4b*U3(n+2)+8ab*U3(n+3)) - 2*(1+a+b+ab))",
      IndexDomain{0, false, {}}, eq3_lhs, eq3_rhs(false)));
  cat.push_back(universal_entry(
      "eq3.corrected",
      "JQ(n)^2 + JQ(n+1)^2 + JQ(n+2)^2 = (1/7)*(14*sum J3*JQ - 3*2^(2n+2)*W "
      "+ 2^(n+2)*(U3(n)+2a*U3(n+1)+4b*U3(n+2)+8ab*U3(n+3)) - 2*(1+a+b+ab))",
      IndexDomain{0, false, {}}, eq3_lhs, eq3_rhs(true)));

  cat.push_back(universal_entry(
      "eq4",
      "jQ(n)^2 - 9*JQ(n)^2 = 2*jl3(n)*jQ(n) - 18*J3(n)*JQ(n) "
      "- 2^(n+2)*(jl3(n-3) + 2a*jl3(n-2) + 4b*jl3(n-1) + 8ab*jl3(n))",
      IndexDomain{0, false, {}}, eq4_lhs,
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n();
        const Rational a = c.params().alpha, b = c.params().beta;
        const Rational combo = c.j(n - 3) + Rational(2) * a * c.j(n - 2) +
                               Rational(4) * b * c.j(n - 1) +
                               Rational(8) * a * b * c.j(n);
        return c.jQ(n).scale(Rational(2) * c.j(n)) -
               c.JQ(n).scale(Rational(18) * c.J(n)) -
               c.scalar_quat(c.pow2(n + 2) * combo);
      }));
  cat.push_back(fixed_entry(
      "eq4.real", "square difference at H(1,1): tail -2^n*(17*jl3(n) + 7*jl3(n-1) + 3*jl3(n-2))",
      AlgebraParams::real(), IndexDomain{0, false, {}}, eq4_lhs,
      eq4_bullet_rhs([](const EvalContext& c) {
        const long n = c.n();
        return -(c.pow2(n) * (Rational(17) * c.j(n) + Rational(7) * c.j(n - 1) +
                              Rational(3) * c.j(n - 2)));
      })));
  cat.push_back(fixed_entry(
      "eq4.split", "square difference at H(1,-1): tail +3*2^n*(5*jl3(n) + 3*jl3(n-1) - jl3(n-2))",
      AlgebraParams::split(), IndexDomain{0, false, {}}, eq4_lhs,
      eq4_bullet_rhs([](const EvalContext& c) {
        const long n = c.n();
        return Rational(3) * c.pow2(n) *
               (Rational(5) * c.j(n) + Rational(3) * c.j(n - 1) - c.j(n - 2));
      })));
  cat.push_back(fixed_entry(
      "eq4.semi.as_printed",
      "square difference at H(1,0): tail -2^(n+1)*(jl3(n) - jl3(n-1))",
      AlgebraParams::semi(), IndexDomain{0, false, {}}, eq4_lhs,
      eq4_bullet_rhs([](const EvalContext& c) {
        return -(c.pow2(c.n() + 1) * (c.j(c.n()) - c.j(c.n() - 1)));
      })));
  cat.push_back(fixed_entry(
      "eq4.semi.corrected",
      "square difference at H(1,0): tail -2^(n+1)*(jl3(n-3) + 2*jl3(n-2))",
      AlgebraParams::semi(), IndexDomain{0, false, {}}, eq4_lhs,
      eq4_bullet_rhs([](const EvalContext& c) {
        return -(c.pow2(c.n() + 1) *
                 (c.j(c.n() - 3) + Rational(2) * c.j(c.n() - 2)));
      })));
  cat.push_back(fixed_entry(
      "eq4.split_semi",
      "square difference at H(-1,0): tail -2^(n+1)*(jl3(n-3) - 2*jl3(n-2))",
      AlgebraParams::split_semi(), IndexDomain{0, false, {}}, eq4_lhs,
      eq4_bullet_rhs([](const EvalContext& c) {
        return -(c.pow2(c.n() + 1) *
                 (c.j(c.n() - 3) - Rational(2) * c.j(c.n() - 2)));
      })));
  cat.push_back(fixed_entry(
      "eq4.quarter", "square difference at H(0,0): tail -2^(n+1)*jl3(n-3)",
      AlgebraParams::quarter(), IndexDomain{0, false, {}}, eq4_lhs,
      eq4_bullet_rhs([](const EvalContext& c) {
        return -(c.pow2(c.n() + 1) * c.j(c.n() - 3));
      })));

  // --- Norm identities ----------------------------------------------------

  const auto norm_lhs = [](const EvalContext& c) -> CheckValue {
    return c.JQ(c.n()).signed_norm();
  };
  cat.push_back(universal_entry(
      "eq5",
      "N(JQ(n)) = (1/49)*(2^(2n+2)*(1+4a+16b+64ab) "
      "- 2^(n+2)*((1+8ab-4b)*V3(n) + (2a-4b)*V3(n+1)) "
      "+ (1+ab)*V3(n)^2 + a*V3(n+1)^2 + b*V3(n+2)^2)",
      IndexDomain{0, false, {}}, norm_lhs,
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n();
        const Rational a = c.params().alpha, b = c.params().beta;
        const Rational weights = Rational(1) + Rational(4) * a + Rational(16) * b +
                                 Rational(64) * a * b;
        const Rational v0 = c.V(n), v1 = c.V(n + 1), v2 = c.V(n + 2);
        const Rational mid = (Rational(1) + Rational(8) * a * b - Rational(4) * b) * v0 +
                             (Rational(2) * a - Rational(4) * b) * v1;
        const Rational squares =
            (Rational(1) + a * b) * v0 * v0 + a * v1 * v1 + b * v2 * v2;
        return (c.pow2(2 * n + 2) * weights - c.pow2(n + 2) * mid + squares) /
               Rational(49);
      }));
  cat.push_back(fixed_entry(
      "eq5.real",
      "N at H(1,1): (85*2^(2n+2) - 2^(n+2)*(5*V3(n) - 2*V3(n+1)) + V3(n)^2 + 14)/49",
      AlgebraParams::real(), IndexDomain{0, false, {}}, norm_lhs,
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n();
        return (Rational(85) * c.pow2(2 * n + 2) -
                c.pow2(n + 2) * (Rational(5) * c.V(n) - Rational(2) * c.V(n + 1)) +
                c.V(n) * c.V(n) + Rational(14)) /
               Rational(49);
      }));
  cat.push_back(fixed_entry(
      "eq5.split",
      "N at H(1,-1): (-75*2^(2n+2) - 3*2^(n+2)*(2*V3(n+1) - V3(n)) + V3(n+1)^2 - V3(n+2)^2)/49",
      AlgebraParams::split(), IndexDomain{0, false, {}}, norm_lhs,
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n();
        const Rational v1 = c.V(n + 1), v2 = c.V(n + 2);
        return (Rational(-75) * c.pow2(2 * n + 2) -
                Rational(3) * c.pow2(n + 2) * (Rational(2) * v1 - c.V(n)) + v1 * v1 -
                v2 * v2) /
               Rational(49);
      }));
  cat.push_back(fixed_entry(
      "eq5.semi",
      "N at H(1,0): (5*2^(2n+2) - 2^(n+2)*(V3(n) + 2*V3(n+1)) + V3(n)^2 + V3(n+1)^2)/49",
      AlgebraParams::semi(), IndexDomain{0, false, {}}, norm_lhs,
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n();
        const Rational v0 = c.V(n), v1 = c.V(n + 1);
        return (Rational(5) * c.pow2(2 * n + 2) -
                c.pow2(n + 2) * (v0 + Rational(2) * v1) + v0 * v0 + v1 * v1) /
               Rational(49);
      }));
  cat.push_back(fixed_entry(
      "eq5.split_semi",
      "N at H(-1,0): (-3*2^(2n+2) - 2^(n+2)*(V3(n) - 2*V3(n+1)) + V3(n)^2 - V3(n+1)^2)/49",
      AlgebraParams::split_semi(), IndexDomain{0, false, {}}, norm_lhs,
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n();
        const Rational v0 = c.V(n), v1 = c.V(n + 1);
        return (Rational(-3) * c.pow2(2 * n + 2) -
                c.pow2(n + 2) * (v0 - Rational(2) * v1) + v0 * v0 - v1 * v1) /
               Rational(49);
      }));
  cat.push_back(fixed_entry(
      "eq5.quarter", "N at H(0,0): (2^(2n+2) - 2^(n+2)*V3(n) + V3(n)^2)/49",
      AlgebraParams::quarter(), IndexDomain{0, false, {}}, norm_lhs,
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n();
        return (c.pow2(2 * n + 2) - c.pow2(n + 2) * c.V(n) + c.V(n) * c.V(n)) /
               Rational(49);
      }));
  cat.push_back(fixed_entry(
      "t1",
      "Nr(JQ(n)) at H(1,1) = (340*4^n + {-64, +68, -4}*2^n + {18, 23, 15})/49 by n mod 3",
      AlgebraParams::real(), IndexDomain{0, false, {}}, norm_lhs,
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n();
        const Rational p = c.pow2(n);
        const Rational base = Rational(340) * c.pow2(2 * n);
        switch (mod3(n)) {
          case 0: return (base - Rational(64) * p + Rational(18)) / Rational(49);
          case 1: return (base + Rational(68) * p + Rational(23)) / Rational(49);
          default: return (base - Rational(4) * p + Rational(15)) / Rational(49);
        }
      }));

  // --- Quaternion Binet forms ---------------------------------------------

  cat.push_back(universal_entry(
      "binet.jq3", "JQ(n) = (2^(n+1)*hat2 - VQ(n))/7", IndexDomain{0, false, {}},
      [](const EvalContext& c) -> CheckValue { return c.JQ(c.n()); },
      [](const EvalContext& c) -> CheckValue {
        return (c.hat2().scale(c.pow2(c.n() + 1)) - c.VQ(c.n())).scale(Rational(1, 7));
      }));
  cat.push_back(universal_entry(
      "binet.jlq3", "jQ(n) = (2^(n+3)*hat2 + 3*VQ(n))/7", IndexDomain{0, false, {}},
      [](const EvalContext& c) -> CheckValue { return c.jQ(c.n()); },
      [](const EvalContext& c) -> CheckValue {
        return (c.hat2().scale(c.pow2(c.n() + 3)) + c.VQ(c.n()).scale(Rational(3)))
            .scale(Rational(1, 7));
      }));
  cat.push_back(universal_entry(
      "vq3.rec", "VQ(n+2) = -VQ(n+1) - VQ(n)", IndexDomain{0, false, {}},
      [](const EvalContext& c) -> CheckValue { return c.VQ(c.n() + 2); },
      [](const EvalContext& c) -> CheckValue {
        return -(c.VQ(c.n() + 1)) - c.VQ(c.n());
      }));
  cat.push_back(universal_entry(
      "q1.closed",
      "(A*w1^n*hat_w1 - B*w2^n*hat_w2)/(w1-w2) = period-3 table "
      "{2-3e1+e2+2e3, -3+e1+2e2-3e3, 1+2e1-3e2+e3}",
      IndexDomain{{}, false, {}},
      [](const EvalContext& c) -> CheckValue {
        return vq3_closed(c.params(), c.n());
      },
      [](const EvalContext& c) -> CheckValue { return vq3(c.params(), c.n()); }));

  // --- d'Ocagne and Cassini-like identities --------------------------------

  cat.push_back(universal_entry(
      "p10",
      "JQ(m)*JQ(n+1) - JQ(m+1)*JQ(n) = (1/7)*(2^(m+1)*hat2*UQ(n+1) "
      "- 2^(n+1)*UQ(m+1)*hat2 - (sqrt3/3)i*(w1^(m-n)*hat_w1*hat_w2 - w2^(m-n)*hat_w2*hat_w1))",
      IndexDomain{{}, true, {}},
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n(), m = c.m();
        return c.JQ(m) * c.JQ(n + 1) - c.JQ(m + 1) * c.JQ(n);
      },
      [](const EvalContext& c) -> CheckValue {
        const long n = c.n(), m = c.m();
        const QuaternionR rational_part =
            (c.hat2() * c.UQ(n + 1)).scale(c.pow2(m + 1)) -
            (c.UQ(m + 1) * c.hat2()).scale(c.pow2(n + 1));
        const Eisenstein w = Eisenstein::omega();
        const Eisenstein w2 = w.conj();
        // (sqrt3/3) i = (w1 - w2)/3 = (1 + 2w)/3
        const Eisenstein root3_third(Rational(1, 3), Rational(2, 3));
        const QuaternionE hats =
            (c.hat_omega1() * c.hat_omega2()).scale(w.pow(m - n)) -
            (c.hat_omega2() * c.hat_omega1()).scale(w2.pow(m - n));
        const QuaternionE total =
            to_eisenstein(rational_part) - hats.scale(root3_third);
        return certify_rational(total).scale(Rational(1, 7));
      }));

  cat.push_back(universal_entry(
      "p11",
      "JQ(n+1)^2 - JQ(n+2)*JQ(n) = (1/7)*(2^(n+1)*(2*hat2*UQ(n+1) - UQ(n+2)*hat2) "
      "+ (2-e1-e2+2e3) - (1+a+b+ab) + (b*e1+a*e2+e3))",
      IndexDomain{0, false, {}}, p11_lhs,
      p11_rhs([](const EvalContext& c) {
        const Rational a = c.params().alpha, b = c.params().beta;
        const QuaternionR head(c.params(), Rational(2), Rational(-1), Rational(-1),
                               Rational(2));
        const QuaternionR mid = QuaternionR::from_scalar(
            c.params(), Rational(1) + a + b + a * b);
        const QuaternionR tail(c.params(), Rational(0), b, a, Rational(1));
        return head - mid + tail;
      })));
  cat.push_back(fixed_entry(
      "p11.real", "Cassini-like constant at H(1,1): -2+3e3", AlgebraParams::real(),
      IndexDomain{0, false, {}}, p11_lhs, p11_rhs(const_quat(-2, 0, 0, 3))));
  cat.push_back(fixed_entry(
      "p11.split.as_printed", "Cassini-like constant at H(1,-1): 2-2e2+3e3",
      AlgebraParams::split(), IndexDomain{0, false, {}}, p11_lhs,
      p11_rhs(const_quat(2, 0, -2, 3))));
  cat.push_back(fixed_entry(
      "p11.split.corrected", "Cassini-like constant at H(1,-1): 2-2e1+3e3",
      AlgebraParams::split(), IndexDomain{0, false, {}}, p11_lhs,
      p11_rhs(const_quat(2, -2, 0, 3))));
  cat.push_back(fixed_entry(
      "p11.semi", "Cassini-like constant at H(1,0): -e1+3e3", AlgebraParams::semi(),
      IndexDomain{0, false, {}}, p11_lhs, p11_rhs(const_quat(0, -1, 0, 3))));
  cat.push_back(fixed_entry(
      "p11.split_semi", "Cassini-like constant at H(-1,0): 2-e1-2e2+3e3",
      AlgebraParams::split_semi(), IndexDomain{0, false, {}}, p11_lhs,
      p11_rhs(const_quat(2, -1, -2, 3))));
  cat.push_back(fixed_entry(
      "p11.quarter.as_printed", "Cassini-like constant at H(0,0): -1+3e3",
      AlgebraParams::quarter(), IndexDomain{0, false, {}}, p11_lhs,
      p11_rhs(const_quat(-1, 0, 0, 3))));
  cat.push_back(fixed_entry(
      "p11.quarter.corrected", "Cassini-like constant at H(0,0): 1-e1-e2+3e3",
      AlgebraParams::quarter(), IndexDomain{0, false, {}}, p11_lhs,
      p11_rhs(const_quat(1, -1, -1, 3))));

  return cat;
}

}  // namespace

const std::vector<IdentitySpec>& identity_catalog() {
  static const std::vector<IdentitySpec> cat = build_catalog();
  return cat;
}

const IdentitySpec* find_identity(std::string_view id) {
  for (const auto& spec : identity_catalog())
    if (spec.id == id) return &spec;
  return nullptr;
}

std::string catalog_hash() {
  // FNV-1a 64 over the structural description.
  std::uint64_t h = 1469598103934665603ULL;
  const auto mix = [&h](std::string_view text) {
    for (const unsigned char ch : text) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0x1f;
    h *= 1099511628211ULL;
  };
  for (const auto& spec : identity_catalog()) {
    mix(spec.id);
    mix(variant_name(spec.variant));
    mix(spec.statement);
    mix(std::to_string(static_cast<int>(spec.scope)));
    for (const auto& p : spec.fixed_params) {
      mix(p.alpha.str());
      mix(p.beta.str());
    }
    mix(spec.domain.n_min ? std::to_string(*spec.domain.n_min) : "any");
    mix(spec.domain.two_vars ? "nm" : "n");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace jacquat
