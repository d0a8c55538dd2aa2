#include "doctest.h"

#include <cmath>
#include <random>

#include "numrad/bounds.hpp"
#include "numrad/linalg.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace numrad;

namespace {

const Complex I{0.0, 1.0};
ComplexMatrix t2() { return {{1, 0}, {1, 1}}; }
ComplexMatrix t3() { return {{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}; }
ComplexMatrix herm() { return {{2, 1.0 + I, 0}, {1.0 - I, -1, 0.5}, {0, 0.5, 0.3}}; }

constexpr double kTight = 1e-9;

}  // namespace

TEST_CASE("power-family bound") {
  CHECK(std::abs(bound_th1(t3(), 1.0, 0.5) - 9.0 / 4) <= kTight);
  for (double r : {0.0, 0.3, 1.0}) CHECK(std::abs(bound_th1(t3(), 0.0, r) - 4.0) <= kTight);
  CHECK(std::abs(bound_th1(t3(), 12.0 / 13, 0.5) - 28.0 / 13) <= kTight);
  CHECK(code_of([] { bound_th1(t3(), 1.1, 0.5); }) == ErrorCode::BadAlpha);
  CHECK(code_of([] { bound_th1(t3(), 0.5, -0.5); }) == ErrorCode::BadExponent);
}

TEST_CASE("gamma and delta") {
  const GammaDelta gd = gamma_delta(t3());
  CHECK(std::abs(gd.gamma * gd.gamma - 28.0 / 13) <= kTight);
  CHECK(std::abs(gd.delta - 1.5) <= kTight);
  CHECK(std::abs(gd.alpha_gamma - 12.0 / 13) <= 1e-6);
  CHECK(gd.alpha_delta == doctest::Approx(1.0));

  const double nh = spectral_norm(herm());
  const GammaDelta gh = gamma_delta(herm());
  CHECK(std::abs(gh.gamma - nh) <= 1e-9);
  CHECK(std::abs(gh.delta - nh) <= 1e-9);

  const GammaDelta gz = gamma_delta(ComplexMatrix(2, 2));
  CHECK(gz.gamma == 0.0);
  CHECK(gz.delta == 0.0);
}

TEST_CASE("alpha-weighted square moduli") {
  std::mt19937_64 rng(40);
  const auto g = oracle::random_ginibre(rng, 4);
  CHECK(std::abs(bound_th2(g, 0.0) - std::pow(spectral_norm(g), 2)) <= 1e-9);
  CHECK(std::abs(bound_th2(t3(), 0.5) - 2.5) <= kTight);
  const LineMin p = pp0_min(t3());
  CHECK(std::abs(p.value - 16.0 / 7) <= kTight);
  CHECK(std::abs(p.arg - 4.0 / 7) <= 1e-6);
  CHECK(code_of([] { bound_th2(t3(), -1.0); }) == ErrorCode::BadAlpha);
}

TEST_CASE("Buzano-type family") {
  const Th3Family f = bound_th3_family(t3(), 1.0);
  CHECK(std::abs(f.cor4 - 19.0 / 8) <= 1e-8);
  for (double a : {0.0, 0.4, 1.0}) {
    const Th3Family id = bound_th3_family(ComplexMatrix::identity(3), a);
    CHECK(std::abs(id.th3 - 1.0) <= 1e-8);
  }
  std::mt19937_64 rng(41);
  const auto g = oracle::random_ginibre(rng, 3);
  CHECK(std::abs(bound_th3_family(g, 0.0).th3 - std::pow(spectral_norm(g), 2)) <= 1e-9);
  CHECK(code_of([] { bound_th3_family(t3(), 2.0); }) == ErrorCode::BadAlpha);
}

TEST_CASE("classical bounds") {
  const Eqn5Classics c = eqn5_and_classics(t3());
  CHECK(std::abs(c.eqn5 - 19.0 / 8) <= 1e-8);
  CHECK(std::abs(c.kittaneh_sum - 2.5) <= kTight);
  CHECK(std::abs(c.kittaneh_moduli - 1.5) <= kTight);
  const Eqn5Classics id = eqn5_and_classics(ComplexMatrix::identity(2));
  CHECK(std::abs(id.eqn5 - 1.0) <= 1e-8);
  CHECK(std::abs(id.kittaneh_sum - 1.0) <= kTight);
  CHECK(std::abs(id.kittaneh_moduli - 1.0) <= kTight);
  CHECK(std::abs(eqn5_and_classics(herm()).kittaneh_moduli - spectral_norm(herm())) <= 1e-9);
}

TEST_CASE("moduli convex combination bound") {
  const Th4Impr1 r = bound_th4_impr1(t3());
  CHECK(std::abs(r.inner_min - 4.0 / 3) <= kTight);
  CHECK(std::abs(r.alpha_at - 2.0 / 3) <= 1e-6);
  CHECK(std::abs(r.impr1 - std::sqrt(8.0 / 3)) <= kTight);
  CHECK(r.impr1 < 2.0);
  const Th4Impr1 h = bound_th4_impr1(herm());
  CHECK(std::abs(h.inner_min - spectral_norm(herm())) <= 1e-9);
  CHECK(std::abs(h.impr1 - spectral_norm(herm())) <= 1e-9);
  const Th4Impr1 z = bound_th4_impr1(ComplexMatrix(2, 2));
  CHECK(z.inner_min == 0.0);
  CHECK(z.alpha_at == 0.5);
  CHECK(z.impr1 == 0.0);
}

TEST_CASE("general lower bounds") {
  CHECK(std::abs(lower_general(t2()).low1 - 1.5) <= 1e-12);
  CHECK(std::abs(lower_general(herm()).low1 - spectral_norm(herm())) <= 1e-10);
  CHECK(std::abs(lower_general(t3()).low4 - std::sqrt(5.0) / 2) <= 1e-12);
  CHECK_THROWS_AS(lower_general(ComplexMatrix(2, 3)), Error);
}

TEST_CASE("report on T3") {
  const BoundReport r = bound_report(t3());
  CHECK(r.tightest_upper == BoundId::COR1_MIN);
  CHECK(std::abs(r.entry(BoundId::COR1_MIN).on_w_scale() - std::sqrt(28.0 / 13)) <= kTight);
  CHECK(std::abs(r.entry(BoundId::TH1).on_w_scale() - 1.5) <= kTight);
  CHECK(r.entry(BoundId::TH1).r_at == 0.5);
  CHECK(std::abs(r.entry(BoundId::IMPR1).on_w_scale() - std::sqrt(8.0 / 3)) <= kTight);
  CHECK(std::abs(r.entry(BoundId::EQN5).on_w_scale() - std::sqrt(19.0 / 8)) <= 1e-8);
  CHECK(std::abs(r.entry(BoundId::KITTANEH_MODULI).on_w_scale() - 1.5) <= kTight);
  CHECK(r.entries.size() == 16);
  for (const BoundValue& e : r.entries) {
    CHECK(std::isfinite(e.value));
    CHECK(e.value >= 0.0);
    const bool minimized = e.id == BoundId::COR1_GAMMA || e.id == BoundId::COR1_DELTA || e.id == BoundId::COR1_MIN ||
                           e.id == BoundId::PP0 || e.id == BoundId::TH3 || e.id == BoundId::COR3 ||
                           e.id == BoundId::COR4 || e.id == BoundId::IMPR1;
    CHECK(e.alpha_at.has_value() == minimized);
  }
}

TEST_CASE("report on identity and T2") {
  const BoundReport id = bound_report(ComplexMatrix::identity(3));
  for (const BoundValue& e : id.entries) {
    CAPTURE(to_string(e.id));
    const double expect = e.id == BoundId::LOW4 ? std::sqrt(0.5) : 1.0;
    CHECK(std::abs(e.on_w_scale() - expect) <= 1e-8);
  }
  const BoundReport r2 = bound_report(t2());
  CHECK(std::abs(r2.entry(BoundId::LOW1).on_w_scale() - 1.5) <= 1e-12);
  CHECK(r2.tightest_lower == BoundId::LOW1);
}

TEST_CASE("report invariants on random matrices") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 20; ++k) {
    const auto t = oracle::random_ginibre(rng, 2 + k % 5);
    const BoundReport r = bound_report(t);
    for (const BoundValue& e : r.entries) {
      if (e.is_upper())
        CHECK(e.on_w_scale() >= r.w_bracket.lower - 1e-7);
      else
        CHECK(e.on_w_scale() <= r.w_bracket.upper + 1e-7);
    }
  }
}

TEST_CASE("golden-section minima beat a 101-point alpha grid") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 10; ++k) {
    const auto t = oracle::random_ginibre(rng, 2 + k % 4);
    const BoundContext ctx(t);
    auto comb = [](double a, const ComplexMatrix& x, double b, const ComplexMatrix& y) {
      return hermitian_norm(a * x + b * y);
    };
    const GammaDelta gd = gamma_delta(ctx);
    const LineMin pp = pp0_min(ctx);
    const Th4Impr1 im = bound_th4_impr1(ctx);
    const BoundReport rep = bound_report(ctx);
    const double th3 = rep.entry(BoundId::TH3).value, cor3 = rep.entry(BoundId::COR3).value;
    for (int j = 0; j <= 100; ++j) {
      const double a = j / 100.0;
      const double cross = 0.5 * a * ctx.re_abs_product_norm();
      CHECK(gd.gamma * gd.gamma <= comb(1 - 0.75 * a, ctx.abs_sq(), 0.25 * a, ctx.abs_star_sq()) + cross + 1e-8);
      CHECK(gd.delta * gd.delta <= comb(1 - 0.75 * a, ctx.abs_star_sq(), 0.25 * a, ctx.abs_sq()) + cross + 1e-8);
      CHECK(pp.value <= comb(a, ctx.abs_sq(), 1 - a, ctx.abs_star_sq()) + 1e-8);
      CHECK(im.inner_min <= comb(a, ctx.abs(), 1 - a, ctx.abs_star()) + 1e-8);
      const Th3Family f = bound_th3_family(ctx, a);
      CHECK(th3 <= f.th3 + 1e-8);
      CHECK(cor3 <= f.cor3 + 1e-8);
      CHECK(rep.entry(BoundId::COR4).value <= f.cor4 + 1e-8);
    }
  }
}
