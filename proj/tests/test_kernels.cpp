#include "doctest.h"

#include <random>
#include <vector>

#include "numrad/bounds.hpp"
#include "numrad/simd/kernels.hpp"
#include "oracles.hpp"

using namespace numrad::simd;

namespace {

std::vector<cd> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cd> v(n);
  for (cd& z : v) z = {g(rng), g(rng)};
  return v;
}

double close(cd a, cd b, double scale) { return std::abs(a - b) <= 1e-13 * std::max(1.0, scale); }

struct BackendGuard {
  Backend saved = active_backend();
  ~BackendGuard() { set_backend(saved); }
};

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
  const KernelTable& s = *table_for(Backend::Scalar);
  std::mt19937_64 rng(1);
  const auto x = random_vec(rng, 9), y = random_vec(rng, 9);
  cd dc = 0, du = 0;
  double n2 = 0;
  for (std::size_t i = 0; i < 9; ++i) {
    dc += std::conj(x[i]) * y[i];
    du += x[i] * y[i];
    n2 += std::norm(x[i]);
  }
  CHECK(close(s.dotc(x.data(), y.data(), 9), dc, 10));
  CHECK(close(s.dotu(x.data(), y.data(), 9), du, 10));
  CHECK(s.nrm2sq(x.data(), 9) == doctest::Approx(n2).epsilon(1e-14));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const KernelTable* v = table_for(Backend::Avx2);
  if (v == nullptr) {
    MESSAGE("AVX2 unavailable on this CPU; equivalence not exercised");
    return;
  }
  const KernelTable& s = *table_for(Backend::Scalar);
  std::mt19937_64 rng(2);
  for (std::size_t n = 0; n <= 37; ++n) {
    CAPTURE(n);
    const auto x = random_vec(rng, n), y = random_vec(rng, n);
    const double scale = static_cast<double>(n) + 1.0;
    CHECK(close(v->dotc(x.data(), y.data(), n), s.dotc(x.data(), y.data(), n), scale));
    CHECK(close(v->dotu(x.data(), y.data(), n), s.dotu(x.data(), y.data(), n), scale));
    CHECK(v->nrm2sq(x.data(), n) == doctest::Approx(s.nrm2sq(x.data(), n)).epsilon(1e-13));

    const cd a{0.3, -1.7};
    auto ys = y, yv = y;
    s.axpy(a, x.data(), ys.data(), n);
    v->axpy(a, x.data(), yv.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(close(ys[i], yv[i], 4));

    auto xs = x, xv = x;
    ys = y;
    yv = y;
    const double c = 0.8;
    const cd ra{-0.36, 0.48}, rb{0.36, 0.48};
    s.rot(xs.data(), ys.data(), n, c, ra, rb);
    v->rot(xv.data(), yv.data(), n, c, ra, rb);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(close(xs[i], xv[i], 4));
      CHECK(close(ys[i], yv[i], 4));
      // Naive check of the rotation definition.
      CHECK(close(xs[i], c * x[i] + ra * y[i], 4));
      CHECK(close(ys[i], rb * x[i] + c * y[i], 4));
    }
  }
}

TEST_CASE("backend selection round-trips and results agree end to end") {
  BackendGuard guard;
  REQUIRE(set_backend(Backend::Scalar));
  CHECK(active_backend() == Backend::Scalar);
  CHECK(backend_name(Backend::Scalar) == "scalar");
  std::mt19937_64 rng(3);
  const auto t = oracle::random_ginibre(rng, 5);
  const auto scalar_report = numrad::bound_report(t, 1e-9);
  if (!set_backend(Backend::Avx2)) {
    CHECK_FALSE(backend_available(Backend::Avx2));
    return;
  }
  CHECK(active_backend() == Backend::Avx2);
  const auto avx_report = numrad::bound_report(t, 1e-9);
  REQUIRE(avx_report.entries.size() == scalar_report.entries.size());
  for (std::size_t k = 0; k < avx_report.entries.size(); ++k)
    CHECK(avx_report.entries[k].value == doctest::Approx(scalar_report.entries[k].value).epsilon(1e-9));
  CHECK(avx_report.w_bracket.lower == doctest::Approx(scalar_report.w_bracket.lower).epsilon(1e-9));
}
