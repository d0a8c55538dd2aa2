#include "numrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "numrad/linalg.hpp"

namespace numrad {

ComplexMatrix hermitian_section(const ComplexMatrix& t, double theta) {
  require_square(t, "hermitian_section");
  const Complex e = std::polar(1.0, theta);
  const std::size_t n = t.rows();
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (e * t(i, j) + std::conj(e * t(j, i)));
  return h;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Sample {
  double theta;
  double value;
};

struct Interval {
  Sample a, b;
  double bound;
};

// Max over [a.theta, b.theta] of the support function of
// {z : Re(e^{i a} z) <= h_a, Re(e^{i b} z) <= h_b}.
double supporting_line_bound(const Sample& a, const Sample& b) {
  const double h = b.theta - a.theta;
  const double sh = std::sin(h);
  if (!(sh > 0.0)) return std::numeric_limits<double>::infinity();
  // g(u) = h_a cos u + ((h_b - h_a cos h) / sin h) sin u on u in [0, h]
  const double ca = a.value;
  const double cb = (b.value - a.value * std::cos(h)) / sh;
  const double peak = std::atan2(cb, ca);
  if (peak >= 0.0 && peak <= h) return std::hypot(ca, cb);
  return std::max(a.value, b.value);
}

class SupportFunction {
 public:
  explicit SupportFunction(const ComplexMatrix& t) : t_(t), parts_(cartesian_parts(t)) {}

  double operator()(double theta) {
    ++evaluations_;
    // H(theta) = cos(theta) Re(T) - sin(theta) Im(T)
    const double c = std::cos(theta), s = std::sin(theta);
    const std::size_t n = t_.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = c * parts_.re(i, j) - s * parts_.im(i, j);
    HermitianEig e = herm_eig(h);
    if (e.eigenvalues.front() > best_value_) {
      best_value_ = e.eigenvalues.front();
      best_theta_ = theta;
      best_vector_ = e.basis.column(0);
    }
    return e.eigenvalues.front();
  }

  int evaluations() const { return evaluations_; }
  double best_theta() const { return best_theta_; }
  const Vector& best_vector() const { return best_vector_; }

 private:
  const ComplexMatrix& t_;
  CartesianParts parts_;
  int evaluations_ = 0;
  double best_value_ = -std::numeric_limits<double>::infinity();
  double best_theta_ = 0.0;
  Vector best_vector_;
};

void normalize_phase(Vector& x) {
  const double scale = norm(x);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double mag = std::abs(x[k]);
    if (mag > 1e-12 * scale) {
      const Complex u = std::conj(x[k]) / mag;
      for (Complex& v : x) v *= u;
      x[k] = std::abs(x[k]);
      return;
    }
  }
}

}  // namespace

RadiusBracket numerical_radius(const ComplexMatrix& t, double tol, const RadiusOptions& opts) {
  require_square(t, "numerical_radius");
  if (!(tol >= 1e-12)) throw Error(ErrorCode::BadConfig, "radius tolerance must be >= 1e-12");
  if (opts.initial_grid < 3) throw Error(ErrorCode::BadConfig, "radius grid needs at least 3 angles");

  const std::size_t n = t.rows();
  RadiusBracket out;
  out.lipschitz = spectral_norm(t);
  if (out.lipschitz == 0.0) {
    out.witness.assign(n, Complex{});
    out.witness[0] = 1.0;
    return out;
  }
  const double lip = out.lipschitz;
  // Rounding in the section eigenvalues.
  const double pad = 64.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * lip;

  SupportFunction support(t);
  const int m = opts.initial_grid;
  std::vector<Sample> grid(m + 1);
  for (int j = 0; j < m; ++j) {
    const double theta = kTwoPi * j / m;
    grid[j] = {theta, support(theta)};
  }
  grid[m] = {kTwoPi, grid[0].value};

  auto bound_of = [&](const Sample& a, const Sample& b) {
    const double lipschitz_bound = 0.5 * (a.value + b.value) + 0.5 * lip * (b.theta - a.theta);
    return std::min(lipschitz_bound, supporting_line_bound(a, b)) + pad;
  };

  std::vector<Interval> live;
  live.reserve(m);
  for (int j = 0; j < m; ++j) live.push_back({grid[j], grid[j + 1], bound_of(grid[j], grid[j + 1])});

  auto current_lower = [&] {
    const Vector& x = support.best_vector();
    return std::abs(inner(t * x, x));
  };

  double lower = current_lower();
  double upper = 0.0;
  int round = 0;
  for (;; ++round) {
    upper = 0.0;
    for (const Interval& iv : live) upper = std::max(upper, iv.bound);
    lower = current_lower();
    if (upper - lower <= tol) break;
    if (round >= opts.max_rounds) {
      throw Error(ErrorCode::Timeout, "radius refinement exceeded " + std::to_string(opts.max_rounds) +
                                          " rounds (bracket width " + std::to_string(upper - lower) + ")");
    }
    std::vector<Interval> next;
    for (const Interval& iv : live) {
      if (iv.bound <= lower) continue;
      if (iv.bound <= lower + tol) {
        next.push_back(iv);
        continue;
      }
      const Sample mid{0.5 * (iv.a.theta + iv.b.theta), support(0.5 * (iv.a.theta + iv.b.theta))};
      next.push_back({iv.a, mid, bound_of(iv.a, mid)});
      next.push_back({mid, iv.b, bound_of(mid, iv.b)});
    }
    live = std::move(next);
  }

  out.witness = support.best_vector();
  normalize_phase(out.witness);
  out.lower = std::abs(inner(t * out.witness, out.witness));
  out.upper = std::max(upper, out.lower);
  double angle = std::fmod(support.best_theta(), kTwoPi);
  if (angle < 0.0) angle += kTwoPi;
  out.argmax_angle = angle;
  out.rounds = round;
  out.evaluations = support.evaluations();
  return out;
}

}  // namespace numrad
