#pragma once

// Test-side reference computations. None of these call into the library's
// eigensolver, radius sweep or ascent, so agreement is a genuine cross-check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "numrad/complex_matrix.hpp"

namespace oracle {

using numrad::Complex;
using numrad::ComplexMatrix;
using numrad::Vector;

// Eigenvalues (descending) of a real symmetric matrix by textbook cyclic Jacobi.
inline std::vector<double> real_sym_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += a[i][j] * a[i][j];
        if (i != j) off += a[i][j] * a[i][j];
      }
    if (off <= 1e-30 * std::max(total, 1e-300)) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

// Complex Hermitian H = A + iB embeds as [[A, -B], [B, A]]; every eigenvalue appears twice.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<std::vector<double>> a(2 * n, std::vector<double>(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = 0.5 * (h(i, j).real() + h(j, i).real());
      const double im = 0.5 * (h(i, j).imag() - h(j, i).imag());
      a[i][j] = a[n + i][n + j] = re;
      a[n + i][j] = im;
      a[i][n + j] = -im;
    }
  const auto doubled = real_sym_eigenvalues(std::move(a));
  std::vector<double> ev(n);
  for (std::size_t k = 0; k < n; ++k) ev[k] = doubled[2 * k];
  return ev;
}

inline ComplexMatrix product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline ComplexMatrix conj_transpose(const ComplexMatrix& a) {
  ComplexMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
  return c;
}

inline double op_norm(const ComplexMatrix& a) {
  return std::sqrt(std::max(hermitian_eigenvalues(product(conj_transpose(a), a)).front(), 0.0));
}

inline double frob(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

// max over an equispaced theta grid of lambda_max((e^{i theta} T + e^{-i theta} T*) / 2).
inline double radius_grid(const ComplexMatrix& t, int points = 100000) {
  const std::size_t n = t.rows();
  double best = -1.0;
  ComplexMatrix h(n, n);
  for (int k = 0; k < points; ++k) {
    const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * k / points);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (e * t(i, j) + std::conj(e * t(j, i)));
    best = std::max(best, hermitian_eigenvalues(h).front());
  }
  return best;
}

inline Vector apply(const ComplexMatrix& a, const Vector& x) {
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline Complex dot(const Vector& x, const Vector& y) {  // <x, y>, linear in x
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

inline double vnorm(const Vector& x) { return std::sqrt(std::abs(dot(x, x))); }

inline double alpha_value(const ComplexMatrix& t, double alpha, const Vector& x) {
  const Vector tx = apply(t, x);
  return alpha * std::norm(dot(tx, x)) + (1.0 - alpha) * std::norm(vnorm(tx));
}

inline Vector random_unit(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector x(n);
  for (Complex& z : x) z = {g(rng), g(rng)};
  const double s = vnorm(x);
  for (Complex& z : x) z /= s;
  return x;
}

// sqrt of the best alpha objective over `samples` random unit vectors, followed
// by a random-perturbation hill climb from the best few.
inline double alpha_norm_sampling(const ComplexMatrix& t, double alpha, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = t.rows();
  std::vector<std::pair<double, Vector>> top;
  for (int s = 0; s < samples; ++s) {
    Vector x = random_unit(rng, n);
    const double v = alpha_value(t, alpha, x);
    if (top.size() < 8 || v > top.back().first) {
      top.emplace_back(v, std::move(x));
      std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      if (top.size() > 8) top.pop_back();
    }
  }
  double best = 0.0;
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto& [v, x] : top) {
    for (double step = 0.1; step > 1e-9; step *= 0.7) {
      for (int tries = 0; tries < 60; ++tries) {
        Vector y = x;
        for (Complex& z : y) z += step * Complex(g(rng), g(rng));
        const double s = vnorm(y);
        for (Complex& z : y) z /= s;
        const double vy = alpha_value(t, alpha, y);
        if (vy > v) {
          v = vy;
          x = std::move(y);
        }
      }
    }
    best = std::max(best, v);
  }
  return std::sqrt(best);
}

inline ComplexMatrix random_ginibre(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  ComplexMatrix m(n, n);
  for (Complex& z : m.entries()) z = {g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  const ComplexMatrix g = random_ginibre(rng, n);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

}  // namespace oracle
