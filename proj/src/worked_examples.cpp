#include "numrad/worked_examples.hpp"

#include <algorithm>
#include <cmath>

#include "numrad/ab_normal.hpp"
#include "numrad/bounds.hpp"

namespace numrad {

ComplexMatrix example_t2() { return {{1, 0}, {1, 1}}; }
ComplexMatrix example_t3() { return {{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}; }

bool WorkedExamples::all_pass() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const ExampleRow& r) { return r.pass; });
}

WorkedExamples worked_examples() {
  WorkedExamples out;
  auto add = [&](const char* matrix, const char* quantity, double computed, double expected, const char* form,
                 Comparison cmp = Comparison::Equal) {
    ExampleRow row{matrix, quantity, computed, expected, form, cmp};
    row.pass = cmp == Comparison::Equal ? std::abs(computed - expected) <= row.tol : computed < expected;
    out.rows.push_back(std::move(row));
  };

  const BoundContext t3(example_t3());
  const GammaDelta gd = gamma_delta(t3);
  add("T3", "gamma_sq", gd.gamma * gd.gamma, 28.0 / 13.0, "28/13");
  add("T3", "delta", gd.delta, 1.5, "3/2");
  add("T3", "min_gamma_delta_sq", std::min(gd.gamma * gd.gamma, gd.delta * gd.delta), 2.25, "9/4", Comparison::Less);
  const Th4Impr1 impr = bound_th4_impr1(t3);
  add("T3", "inner_min", impr.inner_min, 4.0 / 3.0, "4/3");
  add("T3", "impr1", impr.impr1, std::sqrt(8.0 / 3.0), "sqrt(8/3)");
  add("T3", "impr1", impr.impr1, t3.norm(), "||T|| = 2", Comparison::Less);

  const ABNormalCertificate cert = ab_certify(example_t2());
  const double s5 = std::sqrt(5.0);
  add("T2", "alpha_sq", cert.alpha_best * cert.alpha_best, (3.0 - s5) / 2.0, "(3-sqrt5)/2");
  add("T2", "beta_sq", cert.beta_best * cert.beta_best, (3.0 + s5) / 2.0, "(3+sqrt5)/2");
  return out;
}

}  // namespace numrad
