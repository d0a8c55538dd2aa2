#include "numrad/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "numrad/simd/kernels.hpp"

namespace numrad {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotABNormal: return "NotABNormal";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadEnsemble: return "BadEnsemble";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

namespace {

void check_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::DimensionMismatch, "matrix entries must be finite");
    }
  }
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "shape mismatch in elementwise operation");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(rows_ * cols_) +
                                                  " entries, got " + std::to_string(entries_.size()));
  }
  check_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector ComplexMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void ComplexMatrix::set_column(std::size_t j, std::span<const Complex> v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  const auto& k = simd::kernels();
  ComplexMatrix c(a.rows(), b.cols());
  // i-k-j order: each update is a contiguous axpy over a row of b.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* out = c.row(i).data();
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Complex s = a(i, l);
      if (s == Complex{}) continue;
      k.axpy(s, b.row(l).data(), out, b.cols());
    }
  }
  return c;
}

void require_square(const ComplexMatrix& m, const char* who) {
  if (!m.square()) {
    throw Error(ErrorCode::NotSquare, std::string(who) + " needs a square matrix, got " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

Vector operator*(const ComplexMatrix& m, std::span<const Complex> x) {
  if (x.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  const auto& k = simd::kernels();
  Vector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = k.dotu(m.row(i).data(), x.data(), m.cols());
  return y;
}

double frobenius_norm(const ComplexMatrix& m) {
  return std::sqrt(simd::kernels().nrm2sq(m.entries().data(), m.entries().size()));
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  require_square(m, "hermitian_part");
  ComplexMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "inner product size mismatch");
  return simd::kernels().dotc(y.data(), x.data(), x.size());
}

double norm(std::span<const Complex> x) { return std::sqrt(simd::kernels().nrm2sq(x.data(), x.size())); }

Vector normalized(std::span<const Complex> x) {
  const double n = norm(x);
  Vector v(x.begin(), x.end());
  if (n > 0.0)
    for (Complex& z : v) z /= n;
  return v;
}

}  // namespace numrad
