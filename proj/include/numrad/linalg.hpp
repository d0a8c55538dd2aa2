#pragma once

#include <cstddef>
#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

/// Eigendecomposition H = U diag(eigenvalues) U* of a Hermitian matrix.
struct HermitianEig {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix basis;              // unitary, column k pairs with eigenvalues[k]
  int sweeps = 0;
};

struct JacobiOptions {
  double hermitian_tol = 1e-12;
  double off_tol = 1e-13;  // stop when off-diagonal Frobenius mass <= off_tol * ||H||_F
  int max_sweeps = 100;
};

/// Cyclic-by-row complex Jacobi. Throws NotHermitian / NoConvergence.
HermitianEig herm_eig(const ComplexMatrix& h, const JacobiOptions& opts = {});
inline HermitianEig herm_eig(const ComplexMatrix& h, double tol) {
  JacobiOptions o;
  o.hermitian_tol = tol;
  return herm_eig(h, o);
}

/// U diag(f(lambda)) U*
template <class F>
ComplexMatrix spectral_apply(const HermitianEig& eig, F&& f);

/// Eigendecomposition of M*M (right) or MM* (left), symmetrized before solving.
HermitianEig gram_eig_right(const ComplexMatrix& m);
HermitianEig gram_eig_left(const ComplexMatrix& m);

/// Largest eigenvalue of a Hermitian matrix.
double lambda_max(const ComplexMatrix& h);

/// Singular values, descending, as square roots of the clamped eigenvalues of M*M.
std::vector<double> singular_values(const ComplexMatrix& m);

/// ||M||_2. For Hermitian arguments prefer hermitian_norm, which avoids squaring.
double spectral_norm(const ComplexMatrix& m);

/// max |lambda| of a Hermitian matrix.
double hermitian_norm(const ComplexMatrix& h);

struct PolarModuli {
  ComplexMatrix abs;       // |M| = (M*M)^{1/2}
  ComplexMatrix abs_star;  // |M*| = (MM*)^{1/2}
};

PolarModuli polar_moduli(const ComplexMatrix& m);

/// P^r for Hermitian PSD P and r in [0, 1]; 0^0 := 1. Throws BadExponent.
ComplexMatrix psd_power(const ComplexMatrix& p, double r);

/// P^r for any r >= 0 from an existing decomposition. Same clamping and 0^0 convention.
ComplexMatrix psd_power(const HermitianEig& eig, double r);

struct CartesianParts {
  ComplexMatrix re;  // (M + M*) / 2
  ComplexMatrix im;  // (M - M*) / (2i)
};

CartesianParts cartesian_parts(const ComplexMatrix& m);

struct KernelComparison {
  bool equal = false;
  std::size_t dim_kernel = 0;          // dim ker M
  std::size_t dim_kernel_adjoint = 0;  // dim ker M*
  double max_sine = 0.0;               // sine of the largest principal angle, when dims agree
};

/// Default relative singular-value threshold for numerical kernels of an n x n matrix.
/// Singular values come from eigenvalues of M*M, whose absolute error is about
/// n eps ||M||^2, so the cut is sqrt(n eps) relative to sigma_max.
double default_kernel_tol(std::size_t n);

/// Orthonormal basis (as columns) of the numerical kernel of M: right singular
/// vectors with sigma <= tol * sigma_max.
ComplexMatrix numerical_kernel(const ComplexMatrix& m, double tol);

/// ker M vs ker M*, compared by dimension and principal angles (all < 1e-8).
KernelComparison kernels_equal(const ComplexMatrix& m, double tol);

// ---------------------------------------------------------------------------

template <class F>
ComplexMatrix spectral_apply(const HermitianEig& eig, F&& f) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix scaled = eig.basis;  // columns times f(lambda)
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= fk;
  }
  ComplexMatrix out = scaled * adjoint(eig.basis);
  // Exact Hermitian symmetry for downstream herm_eig calls.
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = out(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return out;
}

}  // namespace numrad
