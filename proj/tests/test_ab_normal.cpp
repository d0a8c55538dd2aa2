#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "numrad/ab_normal.hpp"
#include "numrad/ensembles.hpp"
#include "numrad/linalg.hpp"
#include "numrad/radius.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace numrad;

namespace {

ComplexMatrix t2() { return {{1, 0}, {1, 1}}; }
ComplexMatrix t3() { return {{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}; }
const double s5 = std::sqrt(5.0);

void check_certificate(const ComplexMatrix& t, const ABNormalCertificate& c, std::mt19937_64& rng) {
  REQUIRE(c.is_ab_normal == c.kernels_equal);
  CHECK(c.alpha_best >= 0.0);
  CHECK(c.alpha_best <= 1.0);
  CHECK(c.beta_best >= 1.0);
  const ComplexMatrix ts = adjoint(t);
  CHECK(std::abs(norm(c.witness_min) - 1.0) <= 1e-12);
  CHECK(std::abs(norm(c.witness_max) - 1.0) <= 1e-12);
  if (!c.is_ab_normal || c.alpha_best == 0.0) return;
  for (int k = 0; k < 100; ++k) {
    const Vector x = oracle::random_unit(rng, t.rows());
    const double tx = norm(t * x), tsx = norm(ts * x);
    CHECK(c.alpha_best * tx <= tsx + 1e-8);
    CHECK(tsx <= c.beta_best * tx + 1e-8);
  }
  const double at_min = norm(ts * c.witness_min) / norm(t * c.witness_min);
  const double at_max = norm(ts * c.witness_max) / norm(t * c.witness_max);
  CHECK(std::abs(at_min - c.raw_min_ratio) <= 1e-8);
  CHECK(std::abs(at_max - c.raw_max_ratio) <= 1e-8);
}

}  // namespace

TEST_CASE("certificate for T2") {
  const ABNormalCertificate c = ab_certify(t2());
  CHECK(c.is_ab_normal);
  CHECK(std::abs(c.alpha_best - std::sqrt((3 - s5) / 2)) <= 1e-12);
  CHECK(std::abs(c.beta_best - std::sqrt((3 + s5) / 2)) <= 1e-12);
  std::mt19937_64 rng(50);
  check_certificate(t2(), c, rng);
}

TEST_CASE("normal matrices certify alpha = beta = 1") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const ComplexMatrix n = random_matrix(Ensemble::Normal, 2 + i % 5, 51, i);
    const ABNormalCertificate c = ab_certify(n);
    CHECK(c.is_ab_normal);
    CHECK(std::abs(c.alpha_best - 1.0) <= 1e-8);
    CHECK(std::abs(c.beta_best - 1.0) <= 1e-8);
  }
}

TEST_CASE("T3 is not (alpha, beta)-normal") {
  const ABNormalCertificate c = ab_certify(t3());
  CHECK_FALSE(c.is_ab_normal);
  CHECK_FALSE(c.kernels_equal);
  CHECK(c.alpha_best == 0.0);
  CHECK(c.beta_best == std::numeric_limits<double>::infinity());
  CHECK(code_of([&] { lower_th5(t3(), c); }) == ErrorCode::NotABNormal);
  CHECK(code_of([&] { lower_th6(t3(), c); }) == ErrorCode::NotABNormal);
  CHECK(code_of([&] { lower_sab(t3(), c); }) == ErrorCode::NotABNormal);
}

TEST_CASE("zero matrix") {
  const ABNormalCertificate c = ab_certify(ComplexMatrix(2, 2));
  CHECK(c.is_ab_normal);
  CHECK(c.alpha_best == 1.0);
  CHECK(c.beta_best == 1.0);
}

TEST_CASE("lower bounds on T2") {
  const ABNormalCertificate c = ab_certify(t2());
  const double phi = (1 + s5) / 2;
  const double factor = (5 - s5) / 2;  // 1 + alpha^2 = 1 + 1/beta^2
  CHECK(std::abs(lower_th5(t2(), c) - std::sqrt(factor * (3 + s5) / 2 / 4 + 1)) <= 1e-12);
  CHECK(lower_th5(t2(), c) == doctest::Approx(1.3800).epsilon(1e-4));
  CHECK(lower_th6(t2(), c) == doctest::Approx(0.95106).epsilon(1e-5));
  CHECK(std::abs(lower_sab(t2(), c) - std::sqrt(factor) * phi / 2) <= 1e-12);
  CHECK(lower_th5(t2(), c) <= 1.5);
}

TEST_CASE("lower bounds on Hermitian and identity") {
  const ComplexMatrix h{{2, Complex(1, 1)}, {Complex(1, -1), -3}};
  const double nh = spectral_norm(h);
  const ABNormalCertificate ch = ab_certify(h);
  CHECK(std::abs(lower_th5(h, ch) - nh) <= 1e-10);
  CHECK(std::abs(lower_sab(h, ch) - std::sqrt(2.0) * nh / 2) <= 1e-10);

  const ComplexMatrix d{{1, 0}, {0, -1}};
  CHECK(std::abs(lower_th6(d, ab_certify(d)) - std::sqrt(0.5)) <= 1e-12);

  const ComplexMatrix id = ComplexMatrix::identity(3);
  const ABNormalCertificate ci = ab_certify(id);
  CHECK(std::abs(lower_th5(id, ci) - 1.0) <= 1e-12);
  CHECK(std::abs(lower_th6(id, ci) - std::sqrt(0.5)) <= 1e-12);
  CHECK(std::abs(lower_sab(id, ci) - std::sqrt(2.0) / 2) <= 1e-12);
}

TEST_CASE("certificate validity, orderings and soundness on random invertible matrices") {
  std::mt19937_64 rng(52);
  for (int k = 0; k < 40; ++k) {
    const auto t = oracle::random_ginibre(rng, 2 + k % 5);
    const ABNormalCertificate c = ab_certify(t);
    REQUIRE(c.is_ab_normal);
    check_certificate(t, c, rng);
    const double th5 = lower_th5(t, c), th6 = lower_th6(t, c), sab = lower_sab(t, c);
    const double nt = spectral_norm(t);
    const RadiusBracket w = numerical_radius(t, 1e-9);
    CHECK(sab <= th5 + 1e-9);
    CHECK(sab <= th6 + 1e-9);
    CHECK(sab > nt / 2);
    CHECK(th5 <= w.upper + 1e-7);
    CHECK(th6 <= w.upper + 1e-7);
    CHECK(w.upper > nt / 2);
  }
}

TEST_CASE("hyponormal construction has beta = 1") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const ComplexMatrix t = random_matrix(Ensemble::HyponormalDiag, 2 + i % 5, 53, i);
    const HermitianEig gap = herm_eig(hermitian_part(adjoint(t) * t - t * adjoint(t)));
    CHECK(gap.eigenvalues.back() >= -1e-10);
    CHECK(std::abs(ab_certify(t).beta_best - 1.0) <= 1e-8);
  }
}

TEST_CASE("rank-deficient normal matrix keeps equal kernels") {
  std::mt19937_64 rng(54);
  const ComplexMatrix u = haar_unitary(rng, 4);
  const Complex d[] = {0.0, Complex(1, 2), -0.5, 0.0};
  const ComplexMatrix t = u * ComplexMatrix::diagonal(std::span<const Complex>(d)) * adjoint(u);
  const ABNormalCertificate c = ab_certify(t);
  CHECK(c.is_ab_normal);
  CHECK(c.kernel_dim == 2);
  CHECK(std::abs(c.alpha_best - 1.0) <= 1e-8);
  CHECK(std::abs(c.beta_best - 1.0) <= 1e-8);
}
