#include "numrad/ingredients.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace numrad {

namespace {

void check_unit(std::size_t n, std::span<const Complex> x, const char* name) {
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, std::string(name) + " has the wrong length");
  const double nx = norm(x);
  if (std::abs(nx - 1.0) > 1e-10) throw Error(ErrorCode::NotUnit, std::string(name) + ": ||.|| = " + std::to_string(nx));
}

double quad(const ComplexMatrix& a, std::span<const Complex> x) { return inner(a * x, x).real(); }

}  // namespace

IngredientContext::IngredientContext(const ComplexMatrix& t)
    : t_(t), gram_right_(gram_eig_right(t)), gram_left_(gram_eig_left(t)) {
  require_square(t, "scalar_inequality_checks");
  norm_ = std::sqrt(std::max(gram_right_.eigenvalues.front(), 0.0));
  abs_ = psd_power(gram_right_, 0.5);
  abs_star_ = psd_power(gram_left_, 0.5);
  abs_eig_ = herm_eig(abs_);
  abs_star_eig_ = herm_eig(abs_star_);
}

IngredientChecks IngredientContext::check(std::span<const Complex> x, std::span<const Complex> y, double r) const {
  const std::size_t n = t_.rows();
  check_unit(n, x, "x");
  check_unit(n, y, "y");
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::BadExponent, "r must lie in [0, 1], got " + std::to_string(r));

  const double tol = -1e-9 * std::max(1.0, norm_ * norm_);
  IngredientChecks c;
  const double lhs = std::norm(inner(t_ * x, y));

  // Powers of T*T and TT* directly.
  c.kato_slack = quad(psd_power(gram_right_, r), x) * quad(psd_power(gram_left_, 1.0 - r), y) - lhs;

  // The same statement routed through functions of |T| and |T*|.
  auto pow_fn = [](double e) {
    return [e](double t) { return std::pow(std::max(t, 0.0), e); };
  };
  const Vector fx = spectral_apply(abs_eig_, pow_fn(r)) * x;
  const Vector gy = spectral_apply(abs_star_eig_, pow_fn(1.0 - r)) * y;
  c.kittaneh_fg_slack = std::pow(numrad::norm(fx), 2) * std::pow(numrad::norm(gy), 2) - lhs;

  c.mccarthy_slack = quad(abs_ * abs_, x) - std::pow(quad(abs_, x), 2);

  const Vector u = abs_star_ * x;
  const Vector v = abs_ * x;
  c.buzano_slack = numrad::norm(u) * numrad::norm(v) + std::abs(inner(u, v)) - 2.0 * std::abs(inner(u, x) * inner(x, v));

  c.kato = c.kato_slack >= tol;
  c.kittaneh_fg = c.kittaneh_fg_slack >= tol;
  c.mccarthy = c.mccarthy_slack >= tol;
  c.buzano = c.buzano_slack >= tol;
  return c;
}

IngredientChecks scalar_inequality_checks(const ComplexMatrix& t, std::span<const Complex> x,
                                          std::span<const Complex> y, double r) {
  return IngredientContext(t).check(x, y, r);
}

double mccarthy_slack(const ComplexMatrix& p, std::span<const Complex> x, double s) {
  require_square(p, "mccarthy_slack");
  check_unit(p.rows(), x, "x");
  if (!(s >= 1.0)) throw Error(ErrorCode::BadExponent, "s must be >= 1, got " + std::to_string(s));
  const HermitianEig eig = herm_eig(p);
  return quad(psd_power(eig, s), x) - std::pow(std::max(quad(p, x), 0.0), s);
}

}  // namespace numrad
