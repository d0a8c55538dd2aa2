#pragma once

#include "numrad/complex_matrix.hpp"

namespace numrad {

/**
 * Certificate for alpha^2 T*T <= TT* <= beta^2 T*T.
 *
 * The extremal ratios ||T*x|| / ||Tx|| come from the Hermitian-definite pencil
 * (TT*, T*T) restricted to the orthogonal complement of ker T. T is reported
 * (alpha, beta)-normal exactly when ker T = ker T* numerically, which in finite
 * dimension is the same as Ran T = Ran T*. With unequal kernels no alpha > 0 and
 * no finite beta work, so alpha_best = 0 and beta_best = +inf.
 */
struct ABNormalCertificate {
  double alpha_best = 0.0;  // in [0, 1]
  double beta_best = 1.0;   // in [1, inf]
  bool kernels_equal = false;
  bool is_ab_normal = false;
  Vector witness_min;  // attains raw_min_ratio
  Vector witness_max;  // attains raw_max_ratio

  // Diagnostics: unclamped extremal ratios on the complement of ker T.
  double raw_min_ratio = 1.0;
  double raw_max_ratio = 1.0;
  std::size_t kernel_dim = 0;
  std::size_t kernel_dim_adjoint = 0;
  double kernel_max_sine = 0.0;
};

/// tol is the relative singular-value cut for the numerical kernel; <= 0 selects default_kernel_tol(n).
ABNormalCertificate ab_certify(const ComplexMatrix& t, double tol = 0.0);

/// sqrt(max{1+a^2, 1+1/b^2} ||T||^2/4 + | ||Re T||^2 - ||Im T||^2 | / 2). Throws NotABNormal.
double lower_th5(const ComplexMatrix& t, const ABNormalCertificate& cert);

/// sqrt(max{1+a^2, 1+1/b^2} ||T||^2/4 + | ||Re T + Im T||^2 - ||Re T - Im T||^2 | / 4). Throws NotABNormal.
double lower_th6(const ComplexMatrix& t, const ABNormalCertificate& cert);

/// max{sqrt(1+a^2), sqrt(1+1/b^2)} ||T|| / 2. Throws NotABNormal.
double lower_sab(const ComplexMatrix& t, const ABNormalCertificate& cert);

}  // namespace numrad
