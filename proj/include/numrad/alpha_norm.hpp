#pragma once

#include <cstdint>
#include <optional>

#include "numrad/complex_matrix.hpp"
#include "numrad/radius.hpp"

namespace numrad {

/// alpha |<Tx, x>|^2 + (1 - alpha) ||Tx||^2 for unit x. Throws BadAlpha / NotUnit.
double alpha_objective(const ComplexMatrix& t, double alpha, std::span<const Complex> x);

/// Tangent-space ascent direction of alpha_objective at unit x.
///
/// With c = <Tx, x>, the conjugate-coordinate gradient is
/// g = alpha (conj(c) Tx + c T*x) + (1 - alpha) T*Tx, and the returned vector is
/// g - <g, x> x. The directional derivative along a tangent d is 2 Re <g, d>.
Vector alpha_gradient(const ComplexMatrix& t, double alpha, std::span<const Complex> x);

/// Sandwich for ||T||_alpha: best_value is attained (a lower bound), upper_cert is certified.
struct AlphaNormEstimate {
  double alpha = 0.0;
  double best_value = 0.0;
  Vector best_vector;
  double upper_cert = 0.0;
  int best_restart = 0;  // index into the start list (0: top singular vector, 1: radius witness)
};

struct AlphaNormOptions {
  int restarts = 16;  // random starts, in addition to the two structured ones
  std::uint64_t seed = 0;
  int max_steps = 500;
  double grad_tol = 1e-10;
  double armijo = 1e-4;
  double radius_tol = 1e-9;
};

/// Projected-gradient multistart. Reuses `radius` for the witness start when given.
AlphaNormEstimate alpha_norm_estimate(const ComplexMatrix& t, double alpha, const AlphaNormOptions& opts = {},
                                      const std::optional<RadiusBracket>& radius = std::nullopt);

struct AscentResult {
  Vector x;
  double value = 0.0;  // objective (squared scale)
  int steps = 0;
};

/// One projected-gradient ascent run from a unit start.
AscentResult alpha_ascent(const ComplexMatrix& t, double alpha, Vector start, const AlphaNormOptions& opts);

}  // namespace numrad
