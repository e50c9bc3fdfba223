#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qeuler/report.hpp"

namespace qeuler {

/// {"order": N, "coeffs": ["p/q", ...]} with N+1 entries.
nlohmann::json series_to_json(const QSeries& s);
/// Throws ParseError on malformed input.
QSeries series_from_json(const nlohmann::json& j);

nlohmann::json value_to_json(const Value& v);
/// The report object; runtime_ms is written as 0 when with_timing is false
/// so that output is reproducible byte for byte.
nlohmann::json report_to_json(const IdentityReport& r, bool with_timing = true);

enum class ReportFormat { Human, Json, Tsv };
/// Throws BadFlag.
ReportFormat parse_report_format(const std::string& text);

/// Json: one array holding every report. Tsv: header plus one line per report.
std::string render_reports(const std::vector<IdentityReport>& reports, ReportFormat fmt, bool with_timing = true);

}  // namespace qeuler
