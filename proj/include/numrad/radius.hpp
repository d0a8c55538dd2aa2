#pragma once

#include "numrad/complex_matrix.hpp"

namespace numrad {

/// Certified enclosure of the numerical radius w(T).
struct RadiusBracket {
  double lower = 0.0;         // |<T witness, witness>|
  double upper = 0.0;         // certified: w(T) <= upper
  double argmax_angle = 0.0;  // in [0, 2 pi)
  Vector witness;             // unit, first nonzero component real positive
  double lipschitz = 0.0;     // ||T||, the Lipschitz constant of the support function
  int rounds = 0;             // refinement rounds used
  int evaluations = 0;        // Hermitian eigenproblems solved

  double width() const noexcept { return upper - lower; }
};

/// (e^{i theta} T + e^{-i theta} T*) / 2
ComplexMatrix hermitian_section(const ComplexMatrix& t, double theta);

struct RadiusOptions {
  int initial_grid = 720;
  int max_rounds = 40;
};

/**
 * Numerical radius by the angle sweep w(T) = max_theta lambda_max(H(theta)).
 *
 * The support function h(theta) = lambda_max(H(theta)) is evaluated on an
 * equispaced grid and refined by bisection around every interval whose
 * certified local maximum still exceeds the best lower bound. Each interval
 * [a, b] carries two certificates and the smaller one is used:
 *   - Lipschitz: (h(a) + h(b)) / 2 + ||T|| (b - a) / 2;
 *   - supporting lines: W(T) lies in both half-planes Re(e^{i a} z) <= h(a)
 *     and Re(e^{i b} z) <= h(b), so h on [a, b] is dominated by the support
 *     function of their intersection, which is a sinusoid with a closed-form max.
 *
 * Throws BadConfig for tol < 1e-12 and Timeout when max_rounds is exhausted.
 */
RadiusBracket numerical_radius(const ComplexMatrix& t, double tol, const RadiusOptions& opts = {});

}  // namespace numrad
