#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "jacquat/errors.hpp"
#include "jacquat/identities.hpp"

namespace jacquat {

namespace {

struct SideValue {
  std::optional<CheckValue> value;  // empty when evaluation raised a diagnostic
  std::string text;                 // exact rendering or the diagnostic
};

SideValue evaluate_side(const Evaluator& eval, const EvalContext& ctx) {
  try {
    CheckValue v = eval(ctx);
    std::string text = check_value_str(v);
    return SideValue{std::move(v), std::move(text)};
  } catch (const NonRealCyclotomicError& e) {
    return SideValue{std::nullopt, e.what()};
  }
}

bool sides_equal(const SideValue& lhs, const SideValue& rhs) {
  if (!lhs.value || !rhs.value) return false;  // a non-real side is a failure
  if (lhs.value->index() != rhs.value->index())
    throw std::logic_error("identity sides produce different value kinds");
  if (std::holds_alternative<Rational>(*lhs.value))
    return std::get<Rational>(*lhs.value) == std::get<Rational>(*rhs.value);
  return std::get<QuaternionR>(*lhs.value) == std::get<QuaternionR>(*rhs.value);
}

std::string params_sort_key(const std::optional<AlgebraParams>& p) {
  if (!p) return "-";
  return p->alpha.str() + "|" + p->beta.str();
}

bool outcome_less(const CheckOutcome& a, const CheckOutcome& b) {
  if (a.id != b.id) return a.id < b.id;
  const bool a_has = a.params.has_value(), b_has = b.params.has_value();
  if (a_has != b_has) return !a_has;  // scalar (no params) sorts first
  if (!a_has) return false;
  if (a.params->alpha != b.params->alpha) return a.params->alpha < b.params->alpha;
  return a.params->beta < b.params->beta;
}

}  // namespace

CheckOutcome check_identity(const IdentitySpec& spec,
                            const std::optional<AlgebraParams>& params,
                            const CheckDomain& domain) {
  const AlgebraParams* params_ptr = nullptr;
  CheckOutcome outcome;
  outcome.id = spec.id;
  outcome.variant = spec.variant;

  switch (spec.scope) {
    case ParamScope::Scalar:
      break;  // parameter-free; any supplied params are ignored
    case ParamScope::Universal:
      if (!params)
        throw ParamsOutOfScopeError("identity '" + spec.id +
                                    "' requires algebra parameters");
      outcome.params = params;
      params_ptr = &*outcome.params;
      break;
    case ParamScope::Fixed: {
      if (!params)
        throw ParamsOutOfScopeError("identity '" + spec.id +
                                    "' requires algebra parameters");
      const bool in_scope =
          std::any_of(spec.fixed_params.begin(), spec.fixed_params.end(),
                      [&](const AlgebraParams& p) { return p == *params; });
      if (!in_scope)
        throw ParamsOutOfScopeError("identity '" + spec.id + "' is stated for " +
                                    spec.fixed_params.front().label() + ", not " +
                                    params->label());
      outcome.params = params;
      params_ptr = &*outcome.params;
      break;
    }
  }

  if (domain.n_lo > domain.n_hi) throw ConfigError("empty n range");
  if (spec.domain.n_min && domain.n_lo < *spec.domain.n_min)
    throw ConfigError("identity '" + spec.id + "' is stated for n >= " +
                      std::to_string(*spec.domain.n_min));
  long m_lo = 0, m_hi = 0;
  if (spec.domain.two_vars) {
    if (!domain.m)
      throw ConfigError("identity '" + spec.id + "' ranges over (n, m); m range required");
    m_lo = domain.m->first;
    m_hi = domain.m->second;
    if (m_lo > m_hi) throw ConfigError("empty m range");
    if (spec.domain.m_min && m_lo < *spec.domain.m_min)
      throw ConfigError("identity '" + spec.id + "' is stated for m >= " +
                        std::to_string(*spec.domain.m_min));
  }

  for (long n = domain.n_lo; n <= domain.n_hi; ++n) {
    const long m_first = spec.domain.two_vars ? m_lo : 0;
    const long m_last = spec.domain.two_vars ? m_hi : 0;
    for (long m = m_first; m <= m_last; ++m) {
      const std::optional<long> m_opt =
          spec.domain.two_vars ? std::optional<long>(m) : std::nullopt;
      EvalContext ctx(params_ptr, n, m_opt, EvalRoute::Fast);
      const SideValue lhs = evaluate_side(spec.lhs, ctx);
      const SideValue rhs = evaluate_side(spec.rhs, ctx);
      ++outcome.instances;
      outcome.negative_index_used |= ctx.negative_index_used();
      if (!sides_equal(lhs, rhs) && outcome.pass) {
        // Re-verify the first failing instance through the independent route
        // (recurrence / cyclotomic evaluation, no tables, naive powering).
        EvalContext indep(params_ptr, n, m_opt, EvalRoute::Independent);
        const SideValue lhs2 = evaluate_side(spec.lhs, indep);
        const SideValue rhs2 = evaluate_side(spec.rhs, indep);
        if (sides_equal(lhs2, rhs2) || lhs2.text != lhs.text || rhs2.text != rhs.text)
          throw std::logic_error("independent re-verification disagrees for '" +
                                 spec.id + "' at n=" + std::to_string(n));
        outcome.pass = false;
        outcome.counterexample = Counterexample{n, m_opt, lhs.text, rhs.text};
      }
    }
  }
  return outcome;
}

CheckOutcome check_identity(std::string_view id,
                            const std::optional<AlgebraParams>& params,
                            const CheckDomain& domain) {
  const IdentitySpec* spec = find_identity(id);
  if (spec == nullptr)
    throw UnknownIdentityError("unknown identity id: '" + std::string(id) + "'");
  return check_identity(*spec, params, domain);
}

std::vector<AlgebraParams> random_params_for_seed(std::uint64_t seed, int count) {
  // splitmix64; fully specified so reports are reproducible everywhere.
  std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ULL;
  const auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::vector<AlgebraParams> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const long a_num = static_cast<long>(next() % 17) - 8;
    const long a_den = 1 + static_cast<long>(next() % 4);
    const long b_num = static_cast<long>(next() % 17) - 8;
    const long b_den = 1 + static_cast<long>(next() % 4);
    out.push_back(AlgebraParams::custom(Rational(a_num, a_den), Rational(b_num, b_den)));
  }
  return out;
}

VerificationReport verify_all(const VerifyConfig& config) {
  if (config.presets.empty()) throw ConfigError("at least one preset is required");
  if (config.n_max < 0) throw ConfigError("empty n range");
  if (config.m_max < 0) throw ConfigError("empty m range");
  if (config.random_params < 0) throw ConfigError("random parameter count must be >= 0");

  // Parameter sets for universal identities: presets first, then the seeded
  // random pairs, with duplicates removed.
  std::vector<AlgebraParams> universal_params = config.presets;
  for (const auto& p : random_params_for_seed(config.seed, config.random_params)) {
    const bool dup = std::any_of(universal_params.begin(), universal_params.end(),
                                 [&](const AlgebraParams& q) { return q == p; });
    if (!dup) universal_params.push_back(p);
  }

  struct Task {
    const IdentitySpec* spec;
    std::optional<AlgebraParams> params;
    CheckDomain domain;
  };
  std::vector<Task> tasks;
  for (const auto& spec : identity_catalog()) {
    CheckDomain dom;
    dom.n_lo = spec.domain.n_min ? std::max(0L, *spec.domain.n_min) : 0;
    dom.n_hi = config.n_max;
    if (dom.n_lo > dom.n_hi) continue;  // no instances in this configuration
    if (spec.domain.two_vars) dom.m = std::make_pair(0L, config.m_max);
    switch (spec.scope) {
      case ParamScope::Scalar:
        tasks.push_back(Task{&spec, std::nullopt, dom});
        break;
      case ParamScope::Universal:
        for (const auto& p : universal_params) tasks.push_back(Task{&spec, p, dom});
        break;
      case ParamScope::Fixed:
        for (const auto& p : spec.fixed_params) {
          const bool requested =
              std::any_of(config.presets.begin(), config.presets.end(),
                          [&](const AlgebraParams& q) { return q == p; });
          if (requested) tasks.push_back(Task{&spec, p, dom});
        }
        break;
    }
  }

  std::vector<CheckOutcome> outcomes(tasks.size());
  unsigned threads = config.threads <= 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : static_cast<unsigned>(config.threads);
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i)
      outcomes[i] = check_identity(*tasks[i].spec, tasks[i].params, tasks[i].domain);
  } else {
    std::atomic<size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const auto worker = [&]() {
      for (;;) {
        const size_t i = cursor.fetch_add(1);
        if (i >= tasks.size()) return;
        try {
          outcomes[i] =
              check_identity(*tasks[i].spec, tasks[i].params, tasks[i].domain);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // Canonical ordering: (id, params); the id embeds the variant suffix.
  std::sort(outcomes.begin(), outcomes.end(), outcome_less);

  // Erratum candidates: printed variant fails while the corrected sibling
  // passes on the same parameters.
  std::set<std::string> corrected_passed;
  for (const auto& o : outcomes) {
    if (o.variant == Variant::Corrected && o.pass) {
      const IdentitySpec* spec = find_identity(o.id);
      corrected_passed.insert(spec->base_id + "@" + params_sort_key(o.params));
    }
  }
  for (auto& o : outcomes) {
    if (o.variant == Variant::AsPrinted && !o.pass) {
      const IdentitySpec* spec = find_identity(o.id);
      if (corrected_passed.count(spec->base_id + "@" + params_sort_key(o.params)))
        o.erratum_candidate = true;
    }
  }

  VerificationReport report;
  report.tool_version = kVersion;
  report.catalog_hash = catalog_hash();
  report.config = config;
  report.outcomes = std::move(outcomes);
  report.total = static_cast<long>(report.outcomes.size());
  for (const auto& o : report.outcomes) {
    if (o.pass)
      ++report.passed;
    else
      ++report.failed;
    if (o.erratum_candidate) ++report.erratum_candidates;
  }
  return report;
}

}  // namespace jacquat
