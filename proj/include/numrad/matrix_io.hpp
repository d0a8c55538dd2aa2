#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "numrad/complex_matrix.hpp"

namespace numrad {

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

enum class MatrixFormat { Json, Text };

/// JSON:  {"n": rows, "m": cols, "entries": [[re, im], ...]}  (row-major, n*m pairs)
/// Text:  "n m" on the first line, then n lines of 2m reals (re im interleaved).
/// The format is detected from the first non-blank character.
ComplexMatrix parse_matrix(std::string_view source);
ComplexMatrix parse_matrix_json(std::string_view source);
ComplexMatrix parse_matrix_text(std::string_view source);

/// Shortest round-trip decimal rendering; parse_matrix(render_matrix(m, f)) == m bit for bit.
std::string render_matrix(const ComplexMatrix& m, MatrixFormat format);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix load_matrix(const std::filesystem::path& path);

/// Shortest decimal that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace numrad
