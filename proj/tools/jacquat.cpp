// jacquat command line: exact sequence and quaternion values, the identity
// verification suite, catalog listing, and a strategy benchmark.
//
// Exit codes: 0 success, 1 unexpected verification failure or benchmark
// mismatch, 2 usage error. Usage errors never produce partial reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "jacquat/identities.hpp"
#include "jacquat/quatseq.hpp"
#include "jacquat/report.hpp"
#include "jacquat/sequences.hpp"
#include "jacquat/version.hpp"

namespace {

using namespace jacquat;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

struct IndexRange {
  long lo = 0;
  long hi = 0;
};

// "5", "-2", or "0..7".
IndexRange parse_index_spec(const std::string& text) {
  const auto parse_long = [](const std::string& s) -> std::optional<long> {
    if (s.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size()) return std::nullopt;
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_long(text);
    if (!v) usage_error("invalid index '" + text + "'");
    return IndexRange{*v, *v};
  }
  const auto lo = parse_long(text.substr(0, dots));
  const auto hi = parse_long(text.substr(dots + 2));
  if (!lo || !hi) usage_error("invalid index range '" + text + "'");
  if (*lo > *hi) usage_error("empty index range '" + text + "'");
  return IndexRange{*lo, *hi};
}

OutputFormat parse_format_or_die(const std::string& text) {
  const auto fmt = parse_output_format(text);
  if (!fmt) usage_error("unknown format '" + text + "' (expected json, csv, or table)");
  return *fmt;
}

AlgebraParams resolve_algebra(const std::string& preset, const std::string& alpha,
                              const std::string& beta) {
  if (!preset.empty()) {
    if (!alpha.empty() || !beta.empty())
      usage_error("--preset and --alpha/--beta are mutually exclusive");
    const auto p = AlgebraParams::from_preset(preset);
    if (!p) usage_error("unknown preset '" + preset + "'");
    return *p;
  }
  if (alpha.empty() || beta.empty())
    usage_error("an algebra is required: --preset NAME or both --alpha and --beta");
  try {
    return AlgebraParams::custom(Rational::parse(alpha), Rational::parse(beta));
  } catch (const DomainError& e) {
    usage_error(e.what());
  }
}

// ---------------------------------------------------------------------------
// seq

int cmd_seq(const std::string& kind_text, const std::string& nspec,
            const std::string& mode, const std::string& format_text) {
  const auto kind = parse_seq_kind(kind_text);
  if (!kind) usage_error("unknown sequence kind '" + kind_text + "'");
  const IndexRange range = parse_index_spec(nspec);
  const OutputFormat format = parse_format_or_die(format_text);

  if (mode != "closed" && mode != "recurrence" && mode != "binet")
    usage_error("unknown mode '" + mode + "' (expected closed, recurrence, or binet)");
  if (mode == "recurrence" && range.lo < 0)
    usage_error("recurrence mode requires n >= 0");
  if (mode == "binet" && *kind != SeqKind::J3 && *kind != SeqKind::JL3 &&
      *kind != SeqKind::V3)
    usage_error("binet mode is defined for J3, JL3, and V3");

  std::vector<std::pair<long, Rational>> values;
  for (long n = range.lo; n <= range.hi; ++n) {
    Rational v = mode == "closed"       ? seq_closed(*kind, n)
                 : mode == "recurrence" ? seq_recurrence(*kind, n)
                                        : binet_eval(*kind, n);
    values.emplace_back(n, std::move(v));
  }

  switch (format) {
    case OutputFormat::Table: {
      std::string line;
      for (const auto& [n, v] : values) {
        if (!line.empty()) line += ' ';
        line += v.str();
      }
      std::cout << line << "\n";
      break;
    }
    case OutputFormat::Json: {
      ordered_json j;
      j["command"] = "seq";
      j["kind"] = seq_kind_name(*kind);
      j["mode"] = mode;
      ordered_json arr = ordered_json::array();
      for (const auto& [n, v] : values) {
        ordered_json item;
        item["n"] = n;
        item["value"] = v.str();
        arr.push_back(item);
      }
      j["values"] = arr;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      std::cout << "n,value\n";
      for (const auto& [n, v] : values) std::cout << n << ',' << v.str() << "\n";
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// quat

int cmd_quat(const std::string& which_text, const std::string& nspec,
             const std::string& preset, const std::string& alpha,
             const std::string& beta, bool with_norm,
             const std::string& format_text) {
  const auto which = parse_quatseq_kind(which_text);
  if (!which) usage_error("unknown quaternion sequence '" + which_text + "'");
  const IndexRange range = parse_index_spec(nspec);
  if (range.lo != range.hi) usage_error("quat takes a single index n");
  const long n = range.lo;
  const OutputFormat format = parse_format_or_die(format_text);
  const AlgebraParams params = resolve_algebra(preset, alpha, beta);

  const QuaternionR q = quatseq_value(*which, params, n);
  // JQ/jQ consume scalar indices n..n+3, UQ consumes n-1..n+4; below zero the
  // rational backward extension is in play and worth flagging.
  const bool extension = (*which == QuatSeqKind::JQ || *which == QuatSeqKind::JLQ)
                             ? n < 0
                             : (*which == QuatSeqKind::UQ && n < 1);
  const Rational norm_signed = q.signed_norm();
  const Rational norm_abs = q.abs_norm();

  switch (format) {
    case OutputFormat::Table: {
      std::cout << quatseq_kind_name(*which) << "_" << n << " @ " << params.label()
                << " = " << q.str();
      if (extension) std::cout << "  (negative-index extension)";
      std::cout << "\n";
      if (with_norm)
        std::cout << "  N = " << norm_signed.str() << "\n  Nr = " << norm_abs.str()
                  << "\n";
      break;
    }
    case OutputFormat::Json: {
      ordered_json j;
      j["command"] = "quat";
      j["which"] = quatseq_kind_name(*which);
      j["n"] = n;
      j["alpha"] = params.alpha.str();
      j["beta"] = params.beta.str();
      j["components"] = {q.r().str(), q.i().str(), q.j().str(), q.k().str()};
      if (with_norm) {
        j["norm_signed"] = norm_signed.str();
        j["norm_abs"] = norm_abs.str();
      }
      j["negative_index_extension"] = extension;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      std::cout << "which,n,alpha,beta,r,i,j,k";
      if (with_norm) std::cout << ",N,Nr";
      std::cout << "\n";
      std::cout << quatseq_kind_name(*which) << ',' << n << ',' << params.alpha.str()
                << ',' << params.beta.str() << ',' << q.r().str() << ',' << q.i().str()
                << ',' << q.j().str() << ',' << q.k().str();
      if (with_norm) std::cout << ',' << norm_signed.str() << ',' << norm_abs.str();
      std::cout << "\n";
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

std::filesystem::path executable_dir() {
  std::error_code ec;
  const auto self = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (ec) return std::filesystem::current_path();
  return self.parent_path();
}

std::vector<std::string> load_errata(const std::string& explicit_path) {
  std::filesystem::path path;
  if (!explicit_path.empty()) {
    path = explicit_path;
    if (!std::filesystem::exists(path))
      usage_error("errata file not found: " + explicit_path);
  } else {
    const auto dir = executable_dir();
    for (const auto& candidate :
         {dir / "documented_errata.txt",
          dir / ".." / "share" / "jacquat" / "documented_errata.txt"}) {
      if (std::filesystem::exists(candidate)) {
        path = candidate;
        break;
      }
    }
    if (path.empty()) {
      std::cerr << "warning: documented_errata.txt not found; "
                   "treating every failure as unexpected\n";
      return {};
    }
  }
  std::vector<std::string> ids;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() &&
           (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
    line.erase(0, start);
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

int resolve_threads(int requested) {
  int threads = requested > 0 ? requested
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* env = std::getenv("JACQUAT_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && threads > cap) threads = static_cast<int>(cap);
  }
  return threads;
}

int cmd_verify(const std::vector<std::string>& preset_names, bool all_presets,
               int random_params, long n_max, long m_max, long seed, int threads,
               const std::string& format_text, const std::string& out_path,
               const std::string& errata_path) {
  const OutputFormat format = parse_format_or_die(format_text);

  VerifyConfig config;
  if (!preset_names.empty() && !all_presets) {
    config.presets.clear();
    for (const auto& name : preset_names) {
      const auto p = AlgebraParams::from_preset(name);
      if (!p) usage_error("unknown preset '" + name + "'");
      config.presets.push_back(*p);
    }
  }
  config.random_params = random_params;
  config.n_max = n_max;
  config.m_max = m_max;
  config.seed = static_cast<std::uint64_t>(seed);
  config.threads = resolve_threads(threads);

  const std::vector<std::string> errata = load_errata(errata_path);

  VerificationReport report;
  try {
    report = verify_all(config);
  } catch (const ConfigError& e) {
    usage_error(e.what());
  }

  long unexpected = 0;
  for (const auto& o : report.outcomes) {
    if (o.pass) continue;
    const bool documented =
        std::find(errata.begin(), errata.end(), o.id) != errata.end();
    if (!documented) ++unexpected;
  }

  const std::string rendered = report_to(report, format);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) usage_error("cannot write report to '" + out_path + "'");
    out << rendered;
    std::cout << "verification: " << report.total << " checks, " << report.passed
              << " passed, " << report.failed << " failed ("
              << report.erratum_candidates << " erratum candidates), " << unexpected
              << " unexpected; report written to " << out_path << "\n";
  }
  return unexpected == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// identities list

int cmd_identities_list(const std::string& format_text) {
  const OutputFormat format = parse_format_or_die(format_text);
  const auto& catalog = identity_catalog();
  const auto scope_text = [](const IdentitySpec& s) -> std::string {
    switch (s.scope) {
      case ParamScope::Scalar: return "scalar";
      case ParamScope::Universal: return "universal";
      case ParamScope::Fixed: return "fixed " + s.fixed_params.front().label();
    }
    return "?";
  };
  const auto domain_text = [](const IdentitySpec& s) {
    std::string out = s.domain.two_vars ? "n,m" : "n";
    if (s.domain.n_min) out += " >= " + std::to_string(*s.domain.n_min);
    return out;
  };
  switch (format) {
    case OutputFormat::Table: {
      for (const auto& s : catalog) {
        const size_t pad = s.id.size() < 26 ? 26 - s.id.size() : 1;
        std::cout << s.id << std::string(pad, ' ') << "[" << variant_name(s.variant)
                  << ", " << scope_text(s) << ", " << domain_text(s) << "]\n    "
                  << s.statement << "\n";
      }
      std::cout << catalog.size() << " identities (catalog " << catalog_hash()
                << ")\n";
      break;
    }
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& s : catalog) {
        ordered_json j;
        j["id"] = s.id;
        j["variant"] = variant_name(s.variant);
        j["scope"] = scope_text(s);
        j["domain"] = domain_text(s);
        j["statement"] = s.statement;
        arr.push_back(j);
      }
      ordered_json top;
      top["catalog_hash"] = catalog_hash();
      top["identities"] = arr;
      std::cout << top.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      std::cout << "id,variant,scope,domain,statement\n";
      for (const auto& s : catalog)
        std::cout << s.id << ',' << variant_name(s.variant) << ",\"" << scope_text(s)
                  << "\",\"" << domain_text(s) << "\",\"" << s.statement << "\"\n";
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const std::string& kinds_text, long n, int reps) {
  if (n < 0) usage_error("bench requires n >= 0");
  if (reps < 1) usage_error("bench requires at least one repetition");

  std::vector<SeqKind> kinds;
  std::stringstream ss(kinds_text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto kind = parse_seq_kind(token);
    if (!kind) usage_error("unknown sequence kind '" + token + "'");
    kinds.push_back(*kind);
  }
  if (kinds.empty()) usage_error("no sequence kinds given");

  const auto time_ms = [](const auto& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
  };

  std::cout << "kind       n           closed[ms]   recurrence[ms]  check\n";
  for (const SeqKind kind : kinds) {
    // Correctness cross-check before timing.
    const Rational closed = seq_closed(kind, n);
    const Rational recur = seq_recurrence(kind, n);
    if (closed != recur) {
      std::cerr << "error: strategies disagree for " << seq_kind_name(kind)
                << " at n=" << n << ": closed=" << closed.str()
                << " recurrence=" << recur.str() << "\n";
      return kExitFailure;
    }
    double best_closed = 0, best_recur = 0;
    for (int r = 0; r < reps; ++r) {
      const double c = time_ms([&] { (void)seq_closed(kind, n); });
      const double q = time_ms([&] { (void)seq_recurrence(kind, n); });
      if (r == 0 || c < best_closed) best_closed = c;
      if (r == 0 || q < best_recur) best_recur = q;
    }
    std::printf("%-10s %-11ld %-12.3f %-15.3f ok\n", seq_kind_name(kind), n,
                best_closed, best_recur);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact third-order Jacobsthal generalized-quaternion toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // seq
  auto* seq = app.add_subcommand("seq", "evaluate a scalar sequence");
  std::string seq_kind, seq_nspec, seq_mode = "closed", seq_format = "table";
  seq->add_option("kind", seq_kind, "J3, JL3, V3, U3, J2, or JL2")->required();
  seq->add_option("n", seq_nspec, "index n or inclusive range a..b")->required();
  seq->add_option("--mode", seq_mode, "closed, recurrence, or binet");
  seq->add_option("--format", seq_format, "table, json, or csv");

  // quat
  auto* quat = app.add_subcommand("quat", "evaluate a quaternion sequence");
  std::string quat_which, quat_nspec, quat_preset, quat_alpha, quat_beta,
      quat_format = "table";
  bool quat_norm = false;
  quat->add_option("which", quat_which, "JQ, jQ, VQ, or UQ")->required();
  quat->add_option("n", quat_nspec, "index n")->required();
  quat->add_option("--preset", quat_preset, "real, split, semi, split-semi, quarter");
  quat->add_option("--alpha", quat_alpha, "alpha as an exact rational");
  quat->add_option("--beta", quat_beta, "beta as an exact rational");
  quat->add_flag("--norm", quat_norm, "also print the signed norm N and Nr = |N|");
  quat->add_option("--format", quat_format, "table, json, or csv");

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  std::vector<std::string> verify_presets;
  bool verify_all_presets = false;
  int verify_random = 8, verify_threads = 0;
  long verify_nmax = 32, verify_mmax = 16, verify_seed = 0;
  std::string verify_format = "table", verify_out, verify_errata;
  verify->add_option("--preset", verify_presets,
                     "restrict to named presets (repeatable)");
  verify->add_flag("--all-presets", verify_all_presets,
                   "check all five presets (default)");
  verify->add_option("--random-params", verify_random,
                     "number of seeded random (alpha,beta) pairs");
  verify->add_option("--n-max", verify_nmax, "upper bound of the n range [0..n-max]");
  verify->add_option("--m-max", verify_mmax, "upper bound of the m range [0..m-max]");
  verify->add_option("--seed", verify_seed, "seed for the random parameter pairs");
  verify->add_option("--threads", verify_threads,
                     "worker threads (0 = auto; JACQUAT_THREADS caps)");
  verify->add_option("--format", verify_format, "table, json, or csv");
  verify->add_option("--out", verify_out, "write the report to a file");
  verify->add_option("--errata", verify_errata,
                     "documented-errata list (default: alongside the binary)");

  // identities list
  auto* identities = app.add_subcommand("identities", "catalog inspection");
  identities->require_subcommand(1);
  auto* identities_list =
      identities->add_subcommand("list", "list every cataloged identity");
  std::string list_format = "table";
  identities_list->add_option("--format", list_format, "table, json, or csv");

  // bench
  auto* bench = app.add_subcommand("bench", "contrast evaluation strategies");
  std::string bench_kinds = "J3,JL3";
  long bench_n = 100000;
  int bench_reps = 3;
  bench->add_option("--kinds", bench_kinds, "comma-separated sequence kinds");
  bench->add_option("--n", bench_n, "index to evaluate");
  bench->add_option("--reps", bench_reps, "repetitions per strategy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) return cmd_seq(seq_kind, seq_nspec, seq_mode, seq_format);
    if (quat->parsed())
      return cmd_quat(quat_which, quat_nspec, quat_preset, quat_alpha, quat_beta,
                      quat_norm, quat_format);
    if (verify->parsed())
      return cmd_verify(verify_presets, verify_all_presets, verify_random,
                        verify_nmax, verify_mmax, verify_seed, verify_threads,
                        verify_format, verify_out, verify_errata);
    if (identities->parsed()) return cmd_identities_list(list_format);
    if (bench->parsed()) return cmd_bench(bench_kinds, bench_n, bench_reps);
  } catch (const ConfigError& e) {
    usage_error(e.what());
  } catch (const UnknownIdentityError& e) {
    usage_error(e.what());
  } catch (const ParamsOutOfScopeError& e) {
    usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
