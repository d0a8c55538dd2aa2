#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "numrad/ab_normal.hpp"
#include "numrad/alpha_norm.hpp"
#include "numrad/bounds.hpp"
#include "numrad/fuzz.hpp"
#include "numrad/radius.hpp"
#include "numrad/worked_examples.hpp"

namespace numrad {

enum class ReportFormat { Table, Json, Csv };

ReportFormat parse_report_format(std::string_view name);  // throws BadConfig

nlohmann::json vector_to_json(std::span<const Complex> v);
nlohmann::json to_json(const RadiusBracket& b);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const AlphaNormEstimate& e);
nlohmann::json to_json(const ABNormalCertificate& c);
nlohmann::json to_json(const WorkedExamples& ex);

/// CSV columns: bound_id, kind, value_on_w_scale, alpha_at, r_at, slack_vs_w_lower.
/// slack_vs_w_lower is value_on_w_scale - w.lower for every row.
std::string render_csv(const BoundReport& r);
std::string render_table(const BoundReport& r);
std::string render_table(const WorkedExamples& ex);
std::string render(const BoundReport& r, ReportFormat f);

}  // namespace numrad
