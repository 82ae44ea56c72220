#pragma once

/**
 * @file report.hpp
 * @brief Stable serialization of verification reports.
 *
 * JSON is the machine contract: field order is fixed, exact values are
 * decimal strings ("p/q", integers bare), and serializing the same report
 * twice yields identical bytes, so parse + re-dump round-trips exactly.
 */

#include <string>

#include "jacquat/identities.hpp"

namespace jacquat {

enum class OutputFormat { Json, Csv, Table };

std::optional<OutputFormat> parse_output_format(std::string_view text);

std::string report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);
std::string report_to_table(const VerificationReport& report);

std::string report_to(const VerificationReport& report, OutputFormat format);

}  // namespace jacquat
