#include "numrad/alpha_norm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numrad/bounds.hpp"
#include "numrad/linalg.hpp"
#include "numrad/random.hpp"

namespace numrad {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::BadAlpha, "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

void check_unit(const ComplexMatrix& t, std::span<const Complex> x) {
  if (x.size() != t.cols()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from matrix size");
  const double n = norm(x);
  if (std::abs(n - 1.0) > 1e-10) throw Error(ErrorCode::NotUnit, "||x|| = " + std::to_string(n));
}

double objective_unchecked(const ComplexMatrix& t, double alpha, std::span<const Complex> x) {
  const Vector tx = t * x;
  const double c = std::norm(inner(tx, x));
  return alpha * c + (1.0 - alpha) * std::pow(norm(tx), 2);
}

Vector gradient_unchecked(const ComplexMatrix& t, const ComplexMatrix& t_star, double alpha,
                          std::span<const Complex> x) {
  const Vector tx = t * x;
  const Vector tsx = t_star * x;
  const Vector tstx = t_star * tx;
  const Complex c = inner(tx, x);
  Vector g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    g[i] = alpha * (std::conj(c) * tx[i] + c * tsx[i]) + (1.0 - alpha) * tstx[i];
  const Complex along = inner(g, x);
  for (std::size_t i = 0; i < x.size(); ++i) g[i] -= along * x[i];
  return g;
}

}  // namespace

double alpha_objective(const ComplexMatrix& t, double alpha, std::span<const Complex> x) {
  require_square(t, "alpha_objective");
  check_alpha(alpha);
  check_unit(t, x);
  return objective_unchecked(t, alpha, x);
}

Vector alpha_gradient(const ComplexMatrix& t, double alpha, std::span<const Complex> x) {
  require_square(t, "alpha_gradient");
  check_alpha(alpha);
  check_unit(t, x);
  return gradient_unchecked(t, adjoint(t), alpha, x);
}

AscentResult alpha_ascent(const ComplexMatrix& t, double alpha, Vector start, const AlphaNormOptions& opts) {
  const ComplexMatrix t_star = adjoint(t);
  const double scale = std::max(1.0, std::pow(spectral_norm(t), 2));
  AscentResult r{normalized(start), 0.0, 0};
  r.value = objective_unchecked(t, alpha, r.x);
  double step = 1.0 / scale;
  for (; r.steps < opts.max_steps; ++r.steps) {
    const Vector g = gradient_unchecked(t, t_star, alpha, r.x);
    const double gn = norm(g);
    if (gn <= opts.grad_tol * scale) break;
    // Directional derivative along g is 2 ||g||^2.
    const double slope = 2.0 * gn * gn;
    bool accepted = false;
    while (step * gn > 1e-17) {
      Vector trial(r.x.size());
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = r.x[i] + step * g[i];
      trial = normalized(trial);
      const double v = objective_unchecked(t, alpha, trial);
      if (v >= r.value + opts.armijo * step * slope) {
        r.x = std::move(trial);
        r.value = v;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no further progress at working precision
    step *= 2.0;
  }
  return r;
}

AlphaNormEstimate alpha_norm_estimate(const ComplexMatrix& t, double alpha, const AlphaNormOptions& opts,
                                      const std::optional<RadiusBracket>& radius) {
  require_square(t, "alpha_norm_estimate");
  check_alpha(alpha);
  if (opts.restarts < 1) throw Error(ErrorCode::BadConfig, "restarts must be positive");
  const std::size_t n = t.rows();

  AlphaNormEstimate est;
  est.alpha = alpha;
  const BoundContext ctx(t, opts.radius_tol);
  if (ctx.norm() == 0.0) {
    est.best_vector.assign(n, Complex{});
    est.best_vector[0] = 1.0;
    return est;
  }

  std::vector<Vector> starts;
  starts.push_back(ctx.gram_right().basis.column(0));
  starts.push_back(radius ? radius->witness : numerical_radius(t, opts.radius_tol).witness);
  auto rng = stream(opts.seed, 0, /*salt=*/0xa1fa);
  for (int k = 0; k < opts.restarts; ++k) starts.push_back(random_unit_vector(rng, n));

  double best = -1.0;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    AscentResult r = alpha_ascent(t, alpha, starts[k], opts);
    if (r.value > best) {
      best = r.value;
      est.best_vector = std::move(r.x);
      est.best_restart = static_cast<int>(k);
    }
  }
  est.best_value = std::sqrt(std::max(objective_unchecked(t, alpha, est.best_vector), 0.0));
  est.upper_cert = std::min({ctx.norm(), std::sqrt(bound_th2(ctx, alpha)), std::sqrt(bound_th1(ctx, alpha, 0.5))});
  return est;
}

}  // namespace numrad
