#include "numrad/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace numrad {

std::string_view to_string(BoundId id) noexcept {
  switch (id) {
    case BoundId::TH1: return "TH1";
    case BoundId::COR1_GAMMA: return "COR1_GAMMA";
    case BoundId::COR1_DELTA: return "COR1_DELTA";
    case BoundId::COR1_MIN: return "COR1_MIN";
    case BoundId::TH2: return "TH2";
    case BoundId::PP0: return "PP0";
    case BoundId::TH3: return "TH3";
    case BoundId::COR3: return "COR3";
    case BoundId::COR4: return "COR4";
    case BoundId::EQN5: return "EQN5";
    case BoundId::KITTANEH_SUM: return "KITTANEH_SUM";
    case BoundId::KITTANEH_MODULI: return "KITTANEH_MODULI";
    case BoundId::TH4: return "TH4";
    case BoundId::IMPR1: return "IMPR1";
    case BoundId::LOW1: return "LOW1";
    case BoundId::LOW4: return "LOW4";
  }
  return "?";
}

std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::UpperOnWSquared: return "upper-on-w2";
    case BoundKind::UpperOnW: return "upper-on-w";
    case BoundKind::LowerOnW: return "lower-on-w";
  }
  return "?";
}

BoundKind kind_of(BoundId id) noexcept {
  switch (id) {
    case BoundId::COR1_GAMMA:
    case BoundId::COR1_DELTA:
    case BoundId::COR1_MIN:
    case BoundId::KITTANEH_MODULI:
    case BoundId::IMPR1:
      return BoundKind::UpperOnW;
    case BoundId::LOW1:
    case BoundId::LOW4:
      return BoundKind::LowerOnW;
    default:
      return BoundKind::UpperOnWSquared;
  }
}

std::string_view describe(BoundId id) noexcept {
  switch (id) {
    case BoundId::TH1: return "||a/4 (f^4(|T|) + g^4(|T*|)) + (1-a)|T|^2|| + a/2 ||Re(f^2(|T|) g^2(|T*|))||, a=1, f=t^r, g=t^(1-r), best r";
    case BoundId::COR1_GAMMA: return "gamma: min_a ||(1-3a/4)|T|^2 + a/4 |T*|^2|| + a/2 ||Re(|T||T*|)||";
    case BoundId::COR1_DELTA: return "delta: min_a ||(1-3a/4)|T*|^2 + a/4 |T|^2|| + a/2 ||Re(|T||T*|)||";
    case BoundId::COR1_MIN: return "min{gamma, delta}";
    case BoundId::TH2: return "min{||a|T|^2 + (1-a)|T*|^2||, ||a|T*|^2 + (1-a)|T|^2||}, a=1/2";
    case BoundId::PP0: return "min_a ||a|T|^2 + (1-a)|T*|^2||";
    case BoundId::TH3: return "min_a a/4 w^2(|T|+i|T*|) + a/4 w(|T||T*|) + ||(1-7a/8)|T|^2 + a/8 |T*|^2||";
    case BoundId::COR3: return "min_a a/4 w^2(|T|+i|T*|) + a/4 w(|T||T*|) + ||(1-7a/8)|T*|^2 + a/8 |T|^2||";
    case BoundId::COR4: return "min_a of the common part plus the smaller norm term";
    case BoundId::EQN5: return "1/4 w^2(|T|+i|T*|) + 1/4 w(|T||T*|) + 1/8 |||T|^2 + |T*|^2||";
    case BoundId::KITTANEH_SUM: return "1/2 ||T*T + TT*||";
    case BoundId::KITTANEH_MODULI: return "1/2 |||T| + |T*|||";
    case BoundId::TH4: return "||a|T| + (1-a)|T*||| ||T||, a=1/2";
    case BoundId::IMPR1: return "sqrt(min_a ||a|T| + (1-a)|T*||| ||T||)";
    case BoundId::LOW1: return "max{||Re T||, ||Im T||}";
    case BoundId::LOW4: return "max{||Re T + Im T||, ||Re T - Im T||} / sqrt 2";
  }
  return "";
}

double BoundValue::on_w_scale() const noexcept {
  return kind == BoundKind::UpperOnWSquared ? std::sqrt(std::max(value, 0.0)) : value;
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::BadAlpha, "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

void check_exponent(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::BadExponent, "r must lie in [0, 1], got " + std::to_string(r));
  }
}

// a X + b Y for Hermitian X, Y, then its norm.
double norm_of_combination(double a, const ComplexMatrix& x, double b, const ComplexMatrix& y) {
  return hermitian_norm(a * x + b * y);
}

}  // namespace

BoundContext::BoundContext(const ComplexMatrix& t, double radius_tol)
    : t_(t), radius_tol_(radius_tol) {
  require_square(t, "BoundContext");
  gram_right_ = gram_eig_right(t);
  gram_left_ = gram_eig_left(t);
  norm_ = std::sqrt(std::max(gram_right_.eigenvalues.front(), 0.0));
  auto root = [](double l) { return std::sqrt(std::max(l, 0.0)); };
  abs_ = spectral_apply(gram_right_, root);
  abs_star_ = spectral_apply(gram_left_, root);
  abs_sq_ = hermitian_part(adjoint(t) * t);
  abs_star_sq_ = hermitian_part(t * adjoint(t));
  re_abs_product_norm_ = hermitian_norm(hermitian_part(abs_ * abs_star_));
}

const RadiusBracket& BoundContext::radius_abs_sum() const {
  if (!w_abs_sum_) w_abs_sum_ = numerical_radius(abs_ + Complex(0.0, 1.0) * abs_star_, radius_tol_);
  return *w_abs_sum_;
}

const RadiusBracket& BoundContext::radius_abs_product() const {
  if (!w_abs_product_) w_abs_product_ = numerical_radius(abs_ * abs_star_, radius_tol_);
  return *w_abs_product_;
}

double bound_th1(const BoundContext& ctx, double alpha, double r) {
  check_alpha(alpha);
  check_exponent(r);
  const ComplexMatrix f4 = psd_power(ctx.gram_right(), 2.0 * r);
  const ComplexMatrix g4 = psd_power(ctx.gram_left(), 2.0 * (1.0 - r));
  const ComplexMatrix f2 = psd_power(ctx.gram_right(), r);
  const ComplexMatrix g2 = psd_power(ctx.gram_left(), 1.0 - r);
  const double first = hermitian_norm(0.25 * alpha * (f4 + g4) + (1.0 - alpha) * ctx.abs_sq());
  const double second = hermitian_norm(hermitian_part(f2 * g2));
  return first + 0.5 * alpha * second;
}

double bound_th1(const ComplexMatrix& t, double alpha, double r) { return bound_th1(BoundContext(t), alpha, r); }

GammaDelta gamma_delta(const BoundContext& ctx) {
  const double cross = ctx.re_abs_product_norm();
  auto gamma_sq = [&](double a) {
    return norm_of_combination(1.0 - 0.75 * a, ctx.abs_sq(), 0.25 * a, ctx.abs_star_sq()) + 0.5 * a * cross;
  };
  auto delta_sq = [&](double a) {
    return norm_of_combination(1.0 - 0.75 * a, ctx.abs_star_sq(), 0.25 * a, ctx.abs_sq()) + 0.5 * a * cross;
  };
  const LineMin g = golden_section_min(gamma_sq, 0.0, 1.0);
  const LineMin d = golden_section_min(delta_sq, 0.0, 1.0);
  return {std::sqrt(std::max(g.value, 0.0)), std::sqrt(std::max(d.value, 0.0)), g.arg, d.arg};
}

GammaDelta gamma_delta(const ComplexMatrix& t) { return gamma_delta(BoundContext(t)); }

double bound_th2(const BoundContext& ctx, double alpha) {
  check_alpha(alpha);
  return std::min(norm_of_combination(alpha, ctx.abs_sq(), 1.0 - alpha, ctx.abs_star_sq()),
                  norm_of_combination(alpha, ctx.abs_star_sq(), 1.0 - alpha, ctx.abs_sq()));
}

double bound_th2(const ComplexMatrix& t, double alpha) { return bound_th2(BoundContext(t), alpha); }

LineMin pp0_min(const BoundContext& ctx) {
  return golden_section_min(
      [&](double a) { return norm_of_combination(a, ctx.abs_sq(), 1.0 - a, ctx.abs_star_sq()); }, 0.0, 1.0);
}

LineMin pp0_min(const ComplexMatrix& t) { return pp0_min(BoundContext(t)); }

namespace {

struct Th3Parts {
  double common;
  double norm_abs_first;   // ||(1-7a/8)|T|^2 + a/8 |T*|^2||
  double norm_star_first;  // ||(1-7a/8)|T*|^2 + a/8 |T|^2||
};

Th3Parts th3_parts(const BoundContext& ctx, double alpha) {
  const double w_sum = ctx.radius_abs_sum().upper;
  const double w_prod = ctx.radius_abs_product().upper;
  const double k = 1.0 - 7.0 * alpha / 8.0;
  return {0.25 * alpha * w_sum * w_sum + 0.25 * alpha * w_prod,
          norm_of_combination(k, ctx.abs_sq(), alpha / 8.0, ctx.abs_star_sq()),
          norm_of_combination(k, ctx.abs_star_sq(), alpha / 8.0, ctx.abs_sq())};
}

}  // namespace

Th3Family bound_th3_family(const BoundContext& ctx, double alpha) {
  check_alpha(alpha);
  const Th3Parts p = th3_parts(ctx, alpha);
  return {p.common + p.norm_abs_first, p.common + p.norm_star_first,
          p.common + std::min(p.norm_abs_first, p.norm_star_first)};
}

Th3Family bound_th3_family(const ComplexMatrix& t, double alpha) {
  return bound_th3_family(BoundContext(t), alpha);
}

Eqn5Classics eqn5_and_classics(const BoundContext& ctx) {
  Eqn5Classics out;
  out.eqn5 = bound_th3_family(ctx, 1.0).th3;
  out.kittaneh_sum = 0.5 * hermitian_norm(ctx.abs_sq() + ctx.abs_star_sq());
  out.kittaneh_moduli = 0.5 * hermitian_norm(ctx.abs() + ctx.abs_star());
  return out;
}

Eqn5Classics eqn5_and_classics(const ComplexMatrix& t) { return eqn5_and_classics(BoundContext(t)); }

double bound_th4(const BoundContext& ctx, double alpha) {
  check_alpha(alpha);
  return norm_of_combination(alpha, ctx.abs(), 1.0 - alpha, ctx.abs_star()) * ctx.norm();
}

Th4Impr1 bound_th4_impr1(const BoundContext& ctx) {
  if (ctx.norm() == 0.0) return {0.0, 0.5, 0.0};
  const LineMin m =
      golden_section_min([&](double a) { return norm_of_combination(a, ctx.abs(), 1.0 - a, ctx.abs_star()); }, 0.0, 1.0);
  return {m.value, m.arg, std::sqrt(std::max(m.value, 0.0) * ctx.norm())};
}

Th4Impr1 bound_th4_impr1(const ComplexMatrix& t) { return bound_th4_impr1(BoundContext(t)); }

LowerGeneral lower_general(const ComplexMatrix& t) {
  const CartesianParts p = cartesian_parts(t);
  LowerGeneral out;
  out.low1 = std::max(hermitian_norm(p.re), hermitian_norm(p.im));
  out.low4 = std::max(hermitian_norm(p.re + p.im), hermitian_norm(p.re - p.im)) / std::sqrt(2.0);
  return out;
}

const BoundValue& BoundReport::entry(BoundId id) const {
  for (const BoundValue& e : entries)
    if (e.id == id) return e;
  throw Error(ErrorCode::BadConfig, "report has no entry " + std::string(to_string(id)));
}

BoundReport bound_report(const ComplexMatrix& t, double tol) {
  require_square(t, "bound_report");
  return bound_report(BoundContext(t, tol));
}

BoundReport bound_report(const BoundContext& ctx) {
  const ComplexMatrix& t = ctx.op();
  BoundReport report;
  report.w_bracket = numerical_radius(t, ctx.radius_tol());
  report.norm = ctx.norm();

  auto add = [&](BoundId id, double value, std::optional<double> alpha_at = std::nullopt,
                 std::optional<double> r_at = std::nullopt) {
    report.entries.push_back({id, kind_of(id), value, alpha_at, r_at});
  };

  {
    double best = std::numeric_limits<double>::infinity();
    double best_r = 0.5;
    for (double r : kPowerFamilyGrid) {
      const double v = bound_th1(ctx, 1.0, r);
      if (v < best) {
        best = v;
        best_r = r;
      }
    }
    add(BoundId::TH1, best, std::nullopt, best_r);
  }

  const GammaDelta gd = gamma_delta(ctx);
  add(BoundId::COR1_GAMMA, gd.gamma, gd.alpha_gamma);
  add(BoundId::COR1_DELTA, gd.delta, gd.alpha_delta);
  if (gd.gamma <= gd.delta) {
    add(BoundId::COR1_MIN, gd.gamma, gd.alpha_gamma);
  } else {
    add(BoundId::COR1_MIN, gd.delta, gd.alpha_delta);
  }

  add(BoundId::TH2, bound_th2(ctx, 0.5));
  const LineMin pp0 = pp0_min(ctx);
  add(BoundId::PP0, pp0.value, pp0.arg);

  const LineMin th3 = golden_section_min([&](double a) { return bound_th3_family(ctx, a).th3; }, 0.0, 1.0);
  const LineMin cor3 = golden_section_min([&](double a) { return bound_th3_family(ctx, a).cor3; }, 0.0, 1.0);
  add(BoundId::TH3, th3.value, th3.arg);
  add(BoundId::COR3, cor3.value, cor3.arg);
  // min_a [common + min(n1, n2)] = min(min_a TH3, min_a COR3); the objective itself is not convex.
  if (th3.value <= cor3.value) {
    add(BoundId::COR4, th3.value, th3.arg);
  } else {
    add(BoundId::COR4, cor3.value, cor3.arg);
  }

  const Eqn5Classics classics = eqn5_and_classics(ctx);
  add(BoundId::EQN5, classics.eqn5);
  add(BoundId::KITTANEH_SUM, classics.kittaneh_sum);
  add(BoundId::KITTANEH_MODULI, classics.kittaneh_moduli);

  add(BoundId::TH4, bound_th4(ctx, 0.5));
  const Th4Impr1 impr = bound_th4_impr1(ctx);
  add(BoundId::IMPR1, impr.impr1, impr.alpha_at);

  const LowerGeneral low = lower_general(t);
  add(BoundId::LOW1, low.low1);
  add(BoundId::LOW4, low.low4);

  // gamma and delta are ingredients of COR1_MIN, not separate candidates.
  const BoundValue* best_upper = nullptr;
  const BoundValue* best_lower = nullptr;
  for (const BoundValue& e : report.entries) {
    if (e.id == BoundId::COR1_GAMMA || e.id == BoundId::COR1_DELTA) continue;
    const double v = e.on_w_scale();
    if (e.is_upper()) {
      if (!best_upper || v < best_upper->on_w_scale() ||
          (v == best_upper->on_w_scale() && to_string(e.id) < to_string(best_upper->id)))
        best_upper = &e;
    } else {
      if (!best_lower || v > best_lower->on_w_scale() ||
          (v == best_lower->on_w_scale() && to_string(e.id) < to_string(best_lower->id)))
        best_lower = &e;
    }
  }
  report.tightest_upper = best_upper->id;
  report.tightest_lower = best_lower->id;
  return report;
}

}  // namespace numrad
