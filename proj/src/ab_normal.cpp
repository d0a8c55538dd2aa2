#include "numrad/ab_normal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "numrad/linalg.hpp"

namespace numrad {

ABNormalCertificate ab_certify(const ComplexMatrix& t, double tol) {
  require_square(t, "ab_certify");
  const std::size_t n = t.rows();
  if (tol <= 0.0) tol = default_kernel_tol(n);

  ABNormalCertificate cert;
  const KernelComparison kc = kernels_equal(t, tol);
  cert.kernels_equal = kc.equal;
  cert.kernel_dim = kc.dim_kernel;
  cert.kernel_dim_adjoint = kc.dim_kernel_adjoint;
  cert.kernel_max_sine = kc.max_sine;

  const HermitianEig right = gram_eig_right(t);
  const double top = std::max(right.eigenvalues.front(), 0.0);
  Vector e1(n);
  e1[0] = 1.0;
  if (top == 0.0) {
    // T = 0 satisfies the defining inequalities for every alpha, beta.
    cert.alpha_best = cert.beta_best = 1.0;
    cert.is_ab_normal = true;
    cert.witness_min = cert.witness_max = e1;
    return cert;
  }

  // Right singular vectors outside the numerical kernel; T*T is diag(lambda) on them.
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k)
    if (right.eigenvalues[k] > tol * tol * top) keep.push_back(k);
  const std::size_t r = keep.size();
  ComplexMatrix basis(n, r);
  std::vector<double> inv_sqrt(r);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t i = 0; i < n; ++i) basis(i, c) = right.basis(i, keep[c]);
    inv_sqrt[c] = 1.0 / std::sqrt(right.eigenvalues[keep[c]]);
  }

  // Congruence B^{-1/2} (V* TT* V) B^{-1/2}: an ordinary Hermitian problem whose
  // eigenvalues are the generalized eigenvalues of the projected pencil.
  const ComplexMatrix projected = adjoint(basis) * (t * adjoint(t)) * basis;
  ComplexMatrix congruent(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) congruent(i, j) = projected(i, j) * inv_sqrt[i] * inv_sqrt[j];
  const HermitianEig pencil = herm_eig(hermitian_part(congruent));

  auto lift = [&](std::size_t col) {
    Vector y(r);
    for (std::size_t i = 0; i < r; ++i) y[i] = pencil.basis(i, col) * inv_sqrt[i];
    return normalized(basis * y);
  };
  cert.witness_max = lift(0);
  cert.witness_min = lift(r - 1);
  cert.raw_max_ratio = std::sqrt(std::max(pencil.eigenvalues.front(), 0.0));
  cert.raw_min_ratio = std::sqrt(std::max(pencil.eigenvalues.back(), 0.0));

  cert.is_ab_normal = cert.kernels_equal;
  if (cert.is_ab_normal) {
    cert.alpha_best = std::clamp(cert.raw_min_ratio, 0.0, 1.0);
    cert.beta_best = std::max(cert.raw_max_ratio, 1.0);
  } else {
    cert.alpha_best = 0.0;
    cert.beta_best = std::numeric_limits<double>::infinity();
  }
  return cert;
}

namespace {

void require_certified(const ABNormalCertificate& cert) {
  if (!cert.is_ab_normal) throw Error(ErrorCode::NotABNormal, "operator is not (alpha, beta)-normal");
}

double ab_factor(const ABNormalCertificate& cert) {
  const double inv_beta_sq = std::isfinite(cert.beta_best) ? 1.0 / (cert.beta_best * cert.beta_best) : 0.0;
  return std::max(1.0 + cert.alpha_best * cert.alpha_best, 1.0 + inv_beta_sq);
}

}  // namespace

double lower_th5(const ComplexMatrix& t, const ABNormalCertificate& cert) {
  require_certified(cert);
  const double nt = spectral_norm(t);
  const CartesianParts p = cartesian_parts(t);
  const double re = hermitian_norm(p.re), im = hermitian_norm(p.im);
  return std::sqrt(ab_factor(cert) * nt * nt / 4.0 + std::abs(re * re - im * im) / 2.0);
}

double lower_th6(const ComplexMatrix& t, const ABNormalCertificate& cert) {
  require_certified(cert);
  const double nt = spectral_norm(t);
  const CartesianParts p = cartesian_parts(t);
  const double plus = hermitian_norm(p.re + p.im), minus = hermitian_norm(p.re - p.im);
  return std::sqrt(ab_factor(cert) * nt * nt / 4.0 + std::abs(plus * plus - minus * minus) / 4.0);
}

double lower_sab(const ComplexMatrix& t, const ABNormalCertificate& cert) {
  require_certified(cert);
  return std::sqrt(ab_factor(cert)) * spectral_norm(t) / 2.0;
}

}  // namespace numrad
