#include "jacquat/report.hpp"

#include <json.hpp>

#include <sstream>

namespace jacquat {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json outcome_to_json(const CheckOutcome& o) {
  ordered_json j;
  j["id"] = o.id;
  j["variant"] = variant_name(o.variant);
  if (o.params) {
    j["alpha"] = o.params->alpha.str();
    j["beta"] = o.params->beta.str();
  } else {
    j["alpha"] = nullptr;
    j["beta"] = nullptr;
  }
  j["status"] = o.pass ? "pass" : "fail";
  j["instances"] = o.instances;
  j["negative_index_used"] = o.negative_index_used;
  j["erratum_candidate"] = o.erratum_candidate;
  if (o.counterexample) {
    ordered_json ce;
    ce["n"] = o.counterexample->n;
    if (o.counterexample->m)
      ce["m"] = *o.counterexample->m;
    else
      ce["m"] = nullptr;
    ce["lhs"] = o.counterexample->lhs;
    ce["rhs"] = o.counterexample->rhs;
    j["counterexample"] = ce;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string algebra_text(const std::optional<AlgebraParams>& p) {
  return p ? p->label() : std::string("-");
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "table") return OutputFormat::Table;
  return std::nullopt;
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["tool_version"] = report.tool_version;
  j["catalog_hash"] = report.catalog_hash;
  ordered_json cfg;
  ordered_json presets = ordered_json::array();
  for (const auto& p : report.config.presets) {
    ordered_json pj;
    pj["alpha"] = p.alpha.str();
    pj["beta"] = p.beta.str();
    presets.push_back(pj);
  }
  cfg["presets"] = presets;
  cfg["random_params"] = report.config.random_params;
  cfg["n_max"] = report.config.n_max;
  cfg["m_max"] = report.config.m_max;
  cfg["seed"] = report.config.seed;
  j["config"] = cfg;
  ordered_json outcomes = ordered_json::array();
  for (const auto& o : report.outcomes) outcomes.push_back(outcome_to_json(o));
  j["outcomes"] = outcomes;
  ordered_json summary;
  summary["total"] = report.total;
  summary["passed"] = report.passed;
  summary["failed"] = report.failed;
  summary["erratum_candidates"] = report.erratum_candidates;
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "id,variant,alpha,beta,status,instances,negative_index_used,"
         "erratum_candidate,n,m,lhs,rhs\n";
  for (const auto& o : report.outcomes) {
    out << o.id << ',' << variant_name(o.variant) << ',';
    if (o.params)
      out << o.params->alpha.str() << ',' << o.params->beta.str();
    else
      out << ',';
    out << ',' << (o.pass ? "pass" : "fail") << ',' << o.instances << ','
        << (o.negative_index_used ? "true" : "false") << ','
        << (o.erratum_candidate ? "true" : "false") << ',';
    if (o.counterexample) {
      out << o.counterexample->n << ',';
      if (o.counterexample->m) out << *o.counterexample->m;
      out << ',' << csv_quote(o.counterexample->lhs) << ','
          << csv_quote(o.counterexample->rhs);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
  return out.str();
}

std::string report_to_table(const VerificationReport& report) {
  std::ostringstream out;
  out << "verification report (tool " << report.tool_version << ", catalog "
      << report.catalog_hash << ")\n";
  for (const auto& o : report.outcomes) {
    out << "  " << (o.pass ? "pass" : "FAIL") << "  " << o.id;
    out << "  @ " << algebra_text(o.params);
    out << "  [" << o.instances << " instances]";
    if (o.negative_index_used) out << " (negative-index extension used)";
    if (o.erratum_candidate) out << " (erratum candidate)";
    out << '\n';
    if (o.counterexample) {
      out << "        counterexample: n=" << o.counterexample->n;
      if (o.counterexample->m) out << ", m=" << *o.counterexample->m;
      out << "\n          lhs = " << o.counterexample->lhs
          << "\n          rhs = " << o.counterexample->rhs << '\n';
    }
  }
  out << "summary: " << report.total << " checks, " << report.passed << " passed, "
      << report.failed << " failed, " << report.erratum_candidates
      << " erratum candidates\n";
  return out.str();
}

std::string report_to(const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return report_to_json(report);
    case OutputFormat::Csv: return report_to_csv(report);
    case OutputFormat::Table: return report_to_table(report);
  }
  return {};
}

}  // namespace jacquat
