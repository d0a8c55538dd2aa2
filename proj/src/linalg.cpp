#include "numrad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "numrad/simd/kernels.hpp"

namespace numrad {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p, q) with J = [[c, s e^{i phi}], [-s e^{-i phi}, c]] acting on
// (p, q): a <- J* a J, and w <- rows of (V J)^T where w stores eigenvectors as rows.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& w, std::size_t p, std::size_t q,
                   const simd::KernelTable& k) {
  const Complex h = a(p, q);
  const double g = std::abs(h);
  if (g == 0.0) return;
  const Complex phase = h / g;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * g);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.rows();
  // Rows p, q of J* a. Columns outside {p, q} are already final.
  k.rot(a.row(p).data(), a.row(q).data(), n, c, -s * phase, s * std::conj(phase));
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    a(r, p) = std::conj(a(p, r));
    a(r, q) = std::conj(a(q, r));
  }
  a(p, p) = app - t * g;
  a(q, q) = aqq + t * g;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  k.rot(w.row(p).data(), w.row(q).data(), w.cols(), c, -s * std::conj(phase), s * phase);
}

HermitianEig eig_of_gram(const ComplexMatrix& m, bool left) {
  // left: M M*, otherwise M* M. Symmetrized so herm_eig sees an exact Hermitian input.
  ComplexMatrix g = left ? m * adjoint(m) : adjoint(m) * m;
  return herm_eig(hermitian_part(g));
}

}  // namespace

HermitianEig gram_eig_right(const ComplexMatrix& m) { return eig_of_gram(m, false); }
HermitianEig gram_eig_left(const ComplexMatrix& m) { return eig_of_gram(m, true); }

HermitianEig herm_eig(const ComplexMatrix& h, const JacobiOptions& opts) {
  require_square(h, "herm_eig");
  const std::size_t n = h.rows();
  const double scale = frobenius_norm(h);
  const double asym = frobenius_norm(h - adjoint(h));
  if (asym > opts.hermitian_tol * std::max(1.0, scale)) {
    throw Error(ErrorCode::NotHermitian, "||H - H*||_F = " + std::to_string(asym));
  }

  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix w = ComplexMatrix::identity(n);
  const auto& k = simd::kernels();

  int sweep = 0;
  for (;; ++sweep) {
    if (off_diagonal_mass(a) <= opts.off_tol * scale) break;
    if (sweep >= opts.max_sweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, w, p, q, k);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  HermitianEig out;
  out.sweeps = sweep;
  out.eigenvalues.resize(n);
  out.basis = ComplexMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();
    for (std::size_t i = 0; i < n; ++i) out.basis(i, col) = w(src, i);
  }
  return out;
}

double lambda_max(const ComplexMatrix& h) {
  if (h.empty()) return 0.0;
  return herm_eig(h).eigenvalues.front();
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  if (m.empty()) return {};
  const HermitianEig e = eig_of_gram(m, false);
  std::vector<double> s(e.eigenvalues.size());
  std::transform(e.eigenvalues.begin(), e.eigenvalues.end(), s.begin(),
                 [](double l) { return std::sqrt(std::max(l, 0.0)); });
  return s;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  return singular_values(m).front();
}

double hermitian_norm(const ComplexMatrix& h) {
  if (h.empty()) return 0.0;
  const HermitianEig e = herm_eig(h);
  return std::max(std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back()));
}

PolarModuli polar_moduli(const ComplexMatrix& m) {
  require_square(m, "polar_moduli");
  auto root = [](double l) { return std::sqrt(std::max(l, 0.0)); };
  return {spectral_apply(eig_of_gram(m, false), root), spectral_apply(eig_of_gram(m, true), root)};
}

ComplexMatrix psd_power(const HermitianEig& eig, double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::BadExponent, "exponent must be a finite nonnegative real");
  }
  // std::pow(0, 0) == 1, which is the convention we want at r = 0.
  return spectral_apply(eig, [r](double l) { return std::pow(std::max(l, 0.0), r); });
}

ComplexMatrix psd_power(const ComplexMatrix& p, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::BadExponent, "psd_power exponent must lie in [0, 1], got " + std::to_string(r));
  }
  return psd_power(herm_eig(p), r);
}

CartesianParts cartesian_parts(const ComplexMatrix& m) {
  require_square(m, "cartesian_parts");
  const std::size_t n = m.rows();
  CartesianParts out{ComplexMatrix(n, n), ComplexMatrix(n, n)};
  const Complex minus_half_i{0.0, -0.5};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex a = m(i, j);
      const Complex b = std::conj(m(j, i));
      out.re(i, j) = 0.5 * (a + b);
      out.im(i, j) = minus_half_i * (a - b);
    }
  }
  return out;
}

double default_kernel_tol(std::size_t n) {
  return std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)) * std::numeric_limits<double>::epsilon());
}

namespace {

ComplexMatrix kernel_from_gram(const HermitianEig& e, double tol) {
  const std::size_t n = e.eigenvalues.size();
  const double top = std::max(e.eigenvalues.front(), 0.0);
  const double cut = tol * tol * top;
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < n; ++k)
    if (std::max(e.eigenvalues[k], 0.0) <= cut) cols.push_back(k);
  ComplexMatrix basis(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) basis(i, c) = e.basis(i, cols[c]);
  return basis;
}

}  // namespace

ComplexMatrix numerical_kernel(const ComplexMatrix& m, double tol) {
  require_square(m, "numerical_kernel");
  return kernel_from_gram(eig_of_gram(m, false), tol);
}

KernelComparison kernels_equal(const ComplexMatrix& m, double tol) {
  require_square(m, "kernels_equal");
  const ComplexMatrix k1 = kernel_from_gram(eig_of_gram(m, false), tol);
  const ComplexMatrix k2 = kernel_from_gram(eig_of_gram(m, true), tol);

  KernelComparison out;
  out.dim_kernel = k1.cols();
  out.dim_kernel_adjoint = k2.cols();
  if (k1.cols() != k2.cols()) {
    out.max_sine = 1.0;
    return out;
  }
  if (k1.cols() == 0) {
    out.equal = true;
    return out;
  }
  // sin of the largest principal angle = ||(I - K1 K1*) K2||_2.
  const ComplexMatrix residual = k2 - k1 * (adjoint(k1) * k2);
  out.max_sine = spectral_norm(residual);
  out.equal = out.max_sine < 1e-8;
  return out;
}

}  // namespace numrad
