#include "numrad/report_format.hpp"

#include <cmath>

#include <cstdio>
#include <sstream>

#include "numrad/matrix_io.hpp"

namespace numrad {

namespace {

using nlohmann::json;

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string fixed(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw Error(ErrorCode::BadConfig, "unknown format '" + std::string(name) + "'");
}

json vector_to_json(std::span<const Complex> v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

json to_json(const RadiusBracket& b) {
  return {{"lower", b.lower},
          {"upper", b.upper},
          {"width", b.width()},
          {"argmax_angle", b.argmax_angle},
          {"witness", vector_to_json(b.witness)},
          {"lipschitz", b.lipschitz},
          {"rounds", b.rounds},
          {"evaluations", b.evaluations}};
}

json to_json(const BoundReport& r) {
  json entries = json::array();
  for (const BoundValue& e : r.entries) {
    entries.push_back({{"bound_id", std::string(to_string(e.id))},
                       {"kind", std::string(to_string(e.kind))},
                       {"value", e.value},
                       {"value_on_w_scale", e.on_w_scale()},
                       {"alpha_at", optional_json(e.alpha_at)},
                       {"r_at", optional_json(e.r_at)},
                       {"slack_vs_w_lower", e.on_w_scale() - r.w_bracket.lower},
                       {"formula", std::string(describe(e.id))}});
  }
  return {{"w_bracket", to_json(r.w_bracket)},
          {"norm", r.norm},
          {"entries", entries},
          {"tightest_upper", std::string(to_string(r.tightest_upper))},
          {"tightest_lower", std::string(to_string(r.tightest_lower))}};
}

json to_json(const AlphaNormEstimate& e) {
  return {{"alpha", e.alpha},
          {"best_value", e.best_value},
          {"upper_cert", e.upper_cert},
          {"best_vector", vector_to_json(e.best_vector)},
          {"best_restart", e.best_restart}};
}

json to_json(const ABNormalCertificate& c) {
  // beta_best = +inf serializes as null.
  return {{"is_ab_normal", c.is_ab_normal},
          {"kernels_equal", c.kernels_equal},
          {"alpha_best", c.alpha_best},
          {"beta_best", std::isfinite(c.beta_best) ? json(c.beta_best) : json(nullptr)},
          {"witness_min", vector_to_json(c.witness_min)},
          {"witness_max", vector_to_json(c.witness_max)},
          {"diagnostics",
           {{"raw_min_ratio", c.raw_min_ratio},
            {"raw_max_ratio", c.raw_max_ratio},
            {"kernel_dim", c.kernel_dim},
            {"kernel_dim_adjoint", c.kernel_dim_adjoint},
            {"kernel_max_sine", c.kernel_max_sine}}}};
}

json to_json(const WorkedExamples& ex) {
  json rows = json::array();
  for (const ExampleRow& r : ex.rows) {
    rows.push_back({{"matrix", r.matrix},
                    {"quantity", r.quantity},
                    {"computed", r.computed},
                    {"expected", r.expected},
                    {"expected_form", r.expected_form},
                    {"comparison", r.comparison == Comparison::Equal ? "eq" : "lt"},
                    {"tol", r.tol},
                    {"pass", r.pass}});
  }
  return {{"rows", rows}, {"all_pass", ex.all_pass()}};
}

std::string render_csv(const BoundReport& r) {
  std::ostringstream out;
  out << "bound_id,kind,value_on_w_scale,alpha_at,r_at,slack_vs_w_lower\n";
  for (const BoundValue& e : r.entries) {
    out << to_string(e.id) << ',' << to_string(e.kind) << ',' << format_double(e.on_w_scale()) << ','
        << (e.alpha_at ? format_double(*e.alpha_at) : "") << ',' << (e.r_at ? format_double(*e.r_at) : "") << ','
        << format_double(e.on_w_scale() - r.w_bracket.lower) << '\n';
  }
  return out.str();
}

std::string render_table(const BoundReport& r) {
  std::ostringstream out;
  out << "w(T) in [" << fixed(r.w_bracket.lower) << ", " << fixed(r.w_bracket.upper) << "]   ||T|| = "
      << fixed(r.norm) << "\n\n";
  out << pad("bound", 16) << pad("kind", 13) << pad("value", 17) << pad("on w scale", 17) << pad("alpha", 15)
      << pad("r", 6) << "slack vs w\n";
  for (const BoundValue& e : r.entries) {
    out << pad(std::string(to_string(e.id)), 16) << pad(std::string(to_string(e.kind)), 13)
        << pad(fixed(e.value), 17) << pad(fixed(e.on_w_scale()), 17)
        << pad(e.alpha_at ? fixed(*e.alpha_at, 10) : "-", 15) << pad(e.r_at ? fixed(*e.r_at, 2) : "-", 6)
        << fixed(e.on_w_scale() - r.w_bracket.lower) << '\n';
  }
  out << "\ntightest upper: " << to_string(r.tightest_upper) << "\ntightest lower: " << to_string(r.tightest_lower)
      << '\n';
  return out.str();
}

std::string render_table(const WorkedExamples& ex) {
  std::ostringstream out;
  out << pad("matrix", 8) << pad("quantity", 20) << pad("computed", 18) << pad("expected", 22) << "result\n";
  for (const ExampleRow& r : ex.rows) {
    const std::string rel = (r.comparison == Comparison::Equal ? "= " : "< ") + r.expected_form;
    out << pad(r.matrix, 8) << pad(r.quantity, 20) << pad(fixed(r.computed, 13), 18) << pad(rel, 22)
        << (r.pass ? "pass" : "FAIL") << '\n';
  }
  return out.str();
}

std::string render(const BoundReport& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::Table: return render_table(r);
    case ReportFormat::Json: return to_json(r).dump(2) + "\n";
    case ReportFormat::Csv: return render_csv(r);
  }
  return {};
}

}  // namespace numrad
