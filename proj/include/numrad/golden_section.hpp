#pragma once

#include <cmath>

namespace numrad {

struct LineMin {
  double arg = 0.0;
  double value = 0.0;
};

/// Golden-section minimization of a convex f on [lo, hi] down to an interval of
/// width `tol`. The endpoints are also evaluated, so minima on the boundary are
/// returned exactly. The returned value is always an actual evaluation f(arg).
template <class F>
LineMin golden_section_min(F&& f, double lo, double hi, double tol = 1e-10) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  LineMin best{c, fc};
  if (fd < best.value) best = {d, fd};
  const double mid = 0.5 * (a + b);
  if (const double fm = f(mid); fm < best.value) best = {mid, fm};
  if (const double flo = f(lo); flo < best.value) best = {lo, flo};
  if (const double fhi = f(hi); fhi < best.value) best = {hi, fhi};
  return best;
}

}  // namespace numrad
