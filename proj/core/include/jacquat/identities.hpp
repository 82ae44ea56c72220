#pragma once

/**
 * @file identities.hpp
 * @brief Machine-checkable catalog of the printed identities, exact instance
 *        evaluation over index ranges and algebra parameters, erratum
 *        detection with minimal counterexamples, and deterministic reports.
 *
 * Every catalog entry carries exact LHS/RHS evaluators. Where the printed
 * text is in error a sibling entry with variant "corrected" holds the
 * derivation-consistent form; the report labels the printed one an erratum
 * candidate when the corrected sibling passes and the printed one fails.
 *
 * A failing instance is re-verified through an independent evaluation route
 * (recurrence / cyclotomic Binet instead of closed forms, no lookup tables,
 * naive powering) before it is reported.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jacquat/algebra.hpp"
#include "jacquat/quaternion.hpp"
#include "jacquat/quatseq.hpp"
#include "jacquat/sequences.hpp"
#include "jacquat/version.hpp"

namespace jacquat {

enum class Variant { AsPrinted, Corrected };

const char* variant_name(Variant v);

enum class ParamScope {
  Scalar,     // parameter-free scalar identity, checked once
  Universal,  // holds for every (alpha, beta); checked per configured params
  Fixed,      // stated for one specific (alpha, beta)
};

struct IndexDomain {
  std::optional<long> n_min;  // nullopt = all integers
  bool two_vars = false;      // identity ranges over (n, m)
  std::optional<long> m_min;
};

using CheckValue = std::variant<Rational, QuaternionR>;

std::string check_value_str(const CheckValue& v);

enum class EvalRoute { Fast, Independent };

/// Per-instance evaluation facade handed to the catalog's LHS/RHS lambdas.
/// Accessors mirror the printed notation; the context records whether any
/// third- or second-order sequence value at a negative index was consumed
/// (those indices are outside the printed definitions and use the rational
/// backward extension).
class EvalContext {
 public:
  EvalContext(const AlgebraParams* params, long n, std::optional<long> m,
              EvalRoute route);

  long n() const { return n_; }
  long m() const { return m_.value(); }
  const AlgebraParams& params() const;

  Rational J(long idx) const;    // third-order Jacobsthal
  Rational j(long idx) const;    // third-order Jacobsthal-Lucas
  Rational V(long idx) const;    // period-3 V(3)
  Rational U(long idx) const;    // U(3)_k = j(3)_{k-1} - J(3)_{k+1}
  Rational J2(long idx) const;   // second-order Jacobsthal
  Rational j2(long idx) const;   // second-order Jacobsthal-Lucas
  Rational pow2(long e) const;   // exact 2^e

  QuaternionR JQ(long idx) const;
  QuaternionR jQ(long idx) const;
  QuaternionR VQ(long idx) const;
  QuaternionR UQ(long idx) const;
  QuaternionR hat2() const;
  QuaternionE hat_omega1() const;
  QuaternionE hat_omega2() const;

  QuaternionR scalar_quat(const Rational& r) const;
  QuaternionR unit(int axis) const;

  bool negative_index_used() const { return negative_index_; }

 private:
  Rational scalar(SeqKind kind, long idx) const;

  const AlgebraParams* params_;
  long n_;
  std::optional<long> m_;
  EvalRoute route_;
  mutable bool negative_index_ = false;
};

using Evaluator = std::function<CheckValue(const EvalContext&)>;

struct IdentitySpec {
  std::string id;         // catalog id, unique; variant suffix included
  std::string base_id;    // id without the variant suffix
  Variant variant = Variant::AsPrinted;
  std::string statement;  // the checked equality, in ASCII notation
  ParamScope scope = ParamScope::Scalar;
  std::vector<AlgebraParams> fixed_params;  // for Fixed scope
  IndexDomain domain;
  Evaluator lhs;
  Evaluator rhs;
};

/// The complete static catalog, in citation order.
const std::vector<IdentitySpec>& identity_catalog();

/// nullptr when the id is unknown.
const IdentitySpec* find_identity(std::string_view id);

/// FNV-1a 64 over the catalog's structural description, hex-encoded.
std::string catalog_hash();

struct Counterexample {
  long n = 0;
  std::optional<long> m;
  std::string lhs;
  std::string rhs;
};

struct CheckOutcome {
  std::string id;
  Variant variant = Variant::AsPrinted;
  std::optional<AlgebraParams> params;  // nullopt for scalar identities
  long instances = 0;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  bool negative_index_used = false;
  bool erratum_candidate = false;  // filled in during report assembly
};

struct CheckDomain {
  long n_lo = 0;
  long n_hi = 0;
  std::optional<std::pair<long, long>> m;  // required iff the identity uses m
};

/// Evaluates every instance of one identity over the domain. The first
/// failing instance in (n, m)-lexicographic order becomes the counterexample
/// and is re-verified through the independent route.
/// Throws UnknownIdentityError, ParamsOutOfScopeError, or ConfigError.
CheckOutcome check_identity(const IdentitySpec& spec,
                            const std::optional<AlgebraParams>& params,
                            const CheckDomain& domain);
CheckOutcome check_identity(std::string_view id,
                            const std::optional<AlgebraParams>& params,
                            const CheckDomain& domain);

struct VerifyConfig {
  std::vector<AlgebraParams> presets = AlgebraParams::presets();
  int random_params = 8;
  long n_max = 32;
  long m_max = 16;
  std::uint64_t seed = 0;
  int threads = 1;  // <= 0 means hardware concurrency
};

/// Deterministic pseudo-random (alpha, beta) pairs for a seed.
std::vector<AlgebraParams> random_params_for_seed(std::uint64_t seed, int count);

struct VerificationReport {
  std::string tool_version;
  std::string catalog_hash;
  VerifyConfig config;
  std::vector<CheckOutcome> outcomes;  // ordered by (id, variant, params)
  long total = 0;
  long passed = 0;
  long failed = 0;
  long erratum_candidates = 0;
};

/// Runs every applicable catalog entry over the configured scope. Failures
/// are recorded, never thrown. Output ordering (and bytes, once serialized)
/// is independent of the thread count.
VerificationReport verify_all(const VerifyConfig& config);

}  // namespace jacquat
