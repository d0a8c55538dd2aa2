#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "numrad/error.hpp"

namespace numrad {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/**
 * Dense row-major complex matrix.
 *
 * Every operator the library touches (T, T*, |T|, Re(T), pencils, ...) is one
 * of these. Construction rejects non-finite entries so downstream code never
 * has to.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Nested-list literal, mostly for tests: {{1, 0}, {1, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> d);
  static ComplexMatrix diagonal(std::span<const Complex> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Complex> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const Complex> v);

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

void require_square(const ComplexMatrix& m, const char* who);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

Vector operator*(const ComplexMatrix& m, std::span<const Complex> x);

double frobenius_norm(const ComplexMatrix& m);

/// (M + M*) / 2 for square M.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// <x, y> = sum conj(y_i) x_i (linear in the first slot).
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);
Vector normalized(std::span<const Complex> x);

}  // namespace numrad
