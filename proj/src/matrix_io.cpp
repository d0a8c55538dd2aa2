#include "numrad/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace numrad {

namespace {

struct Position {
  std::size_t line = 1, column = 1;
};

Position position_of(std::string_view s, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < s.size(); ++i) {
    if (s[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(std::string_view s, std::size_t offset, const std::string& what) {
  const Position p = position_of(s, offset);
  throw ParseError(p.line, p.column, what);
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

struct Token {
  std::string_view text;
  std::size_t offset;
};

// Splits one line (without its '\n') into whitespace-separated tokens.
std::vector<Token> tokenize(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_blank(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

double parse_real(std::string_view src, const Token& tok) {
  std::string_view t = tok.text;
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec == std::errc::result_out_of_range) fail_at(src, tok.offset, "number out of range '" + std::string(tok.text) + "'");
  if (ec != std::errc() || ptr != t.data() + t.size())
    fail_at(src, tok.offset, "expected a real number, got '" + std::string(tok.text) + "'");
  if (!std::isfinite(v)) fail_at(src, tok.offset, "non-finite value '" + std::string(tok.text) + "'");
  return v;
}

std::size_t parse_extent(std::string_view src, const Token& tok) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size() || v == 0)
    fail_at(src, tok.offset, "expected a positive integer, got '" + std::string(tok.text) + "'");
  return v;
}

std::size_t checked_count(std::size_t n, std::size_t m) {
  if (m != 0 && n > std::numeric_limits<std::size_t>::max() / m / 2)
    throw Error(ErrorCode::DimensionMismatch, "matrix extent overflows");
  return n * m;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  // Keep a fraction or exponent so JSON readers see a float (this also preserves -0).
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

ComplexMatrix parse_matrix_text(std::string_view src) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;
  for (std::size_t start = 0; start <= src.size();) {
    std::size_t end = src.find('\n', start);
    if (end == std::string_view::npos) end = src.size();
    lines.emplace_back(src.substr(start, end - start), start);
    start = end + 1;
  }

  std::size_t li = 0;
  auto next_nonblank = [&]() -> std::vector<Token> {
    for (; li < lines.size(); ++li) {
      auto toks = tokenize(lines[li].first, lines[li].second);
      if (!toks.empty()) {
        ++li;
        return toks;
      }
    }
    return {};
  };

  const auto header = next_nonblank();
  if (header.empty()) fail_at(src, src.size(), "empty input");
  if (header.size() != 2) fail_at(src, header.front().offset, "header must be 'n m'");
  const std::size_t n = parse_extent(src, header[0]);
  const std::size_t m = parse_extent(src, header[1]);

  std::vector<Complex> entries;
  entries.reserve(checked_count(n, m));
  for (std::size_t i = 0; i < n; ++i) {
    const auto toks = next_nonblank();
    if (toks.empty())
      throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    if (toks.size() != 2 * m) {
      const Position p = position_of(src, toks.front().offset);
      throw Error(ErrorCode::DimensionMismatch, "line " + std::to_string(p.line) + ": expected " +
                                                    std::to_string(2 * m) + " reals, got " +
                                                    std::to_string(toks.size()));
    }
    for (std::size_t k = 0; k < m; ++k) entries.emplace_back(parse_real(src, toks[2 * k]), parse_real(src, toks[2 * k + 1]));
  }
  const auto extra = next_nonblank();
  if (!extra.empty()) {
    const Position p = position_of(src, extra.front().offset);
    throw Error(ErrorCode::DimensionMismatch, "line " + std::to_string(p.line) + ": more than " + std::to_string(n) + " rows");
  }
  return {n, m, std::move(entries)};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  auto bad = [](const std::string& what) -> ParseError { return ParseError(1, 1, what); };
  if (!j.is_object()) throw bad("expected a JSON object");
  for (const char* key : {"n", "m", "entries"})
    if (!j.contains(key)) throw bad(std::string("missing field '") + key + "'");
  auto extent = [&](const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
      throw bad(std::string("field '") + key + "' must be a positive integer");
    return static_cast<std::size_t>(v.get<std::uint64_t>());
  };
  const std::size_t n = extent("n"), m = extent("m");
  const auto& e = j.at("entries");
  if (!e.is_array()) throw bad("field 'entries' must be an array");
  if (e.size() != checked_count(n, m))
    throw Error(ErrorCode::DimensionMismatch, "entries has " + std::to_string(e.size()) + " elements, header says " +
                                                  std::to_string(n) + "x" + std::to_string(m));
  std::vector<Complex> entries;
  entries.reserve(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    const auto& z = e[k];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      throw bad("entries[" + std::to_string(k) + "] must be [re, im]");
    entries.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return {n, m, std::move(entries)};
}

ComplexMatrix parse_matrix_json(std::string_view src) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(src.begin(), src.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail_at(src, e.byte == 0 ? 0 : e.byte - 1, e.what());
  }
  return matrix_from_json(j);
}

ComplexMatrix parse_matrix(std::string_view src) {
  for (char c : src) {
    if (is_blank(c)) continue;
    return c == '{' ? parse_matrix_json(src) : parse_matrix_text(src);
  }
  fail_at(src, src.size(), "empty input");
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const Complex& z : m.entries()) entries.push_back({z.real(), z.imag()});
  return {{"n", m.rows()}, {"m", m.cols()}, {"entries", std::move(entries)}};
}

std::string render_matrix(const ComplexMatrix& m, MatrixFormat format) {
  std::ostringstream out;
  if (format == MatrixFormat::Json) {
    out << "{\"n\":" << m.rows() << ",\"m\":" << m.cols() << ",\"entries\":[";
    bool first = true;
    for (const Complex& z : m.entries()) {
      out << (first ? "" : ",") << '[' << format_double(z.real()) << ',' << format_double(z.imag()) << ']';
      first = false;
    }
    out << "]}\n";
  } else {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        out << (j ? " " : "") << format_double(m(i, j).real()) << ' ' << format_double(m(i, j).imag());
      out << '\n';
    }
  }
  return out.str();
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

}  // namespace numrad
