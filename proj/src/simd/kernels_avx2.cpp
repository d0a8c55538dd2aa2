// AVX2 + FMA kernels. One __m256d holds two interleaved complex doubles
// [re0, im0, re1, im1]. Built with -mavx2 -mfma; only reached through the
// dispatcher after a cpuid check.

#include <immintrin.h>

#include "tables.hpp"

namespace numrad::simd::avx2 {
namespace {

inline const double* as_doubles(const cd* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cd* p) { return reinterpret_cast<double*>(p); }

// [re, im] pairs -> [im, re]
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// a * v for a complex scalar broadcast as (ar, ai).
inline __m256d cmul(__m256d ar, __m256d ai, __m256d v) {
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swap_pairs(v)));
}

inline double hsum_even(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[0] + t[2];
}

inline double hsum_odd(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[1] + t[3];
}

cd dotc(const cd* x, const cd* y, std::size_t n) {
  // conj(x) y = (xr yr + xi yi) + i (xr yi - xi yr)
  __m256d same = _mm256_setzero_pd();   // [xr yr, xi yi, ...]
  __m256d cross = _mm256_setzero_pd();  // [xr yi, xi yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d vy = _mm256_loadu_pd(as_doubles(y + i));
    same = _mm256_fmadd_pd(vx, vy, same);
    cross = _mm256_fmadd_pd(vx, swap_pairs(vy), cross);
  }
  double re = hsum_even(same) + hsum_odd(same);
  double im = hsum_even(cross) - hsum_odd(cross);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cd dotu(const cd* x, const cd* y, std::size_t n) {
  // x y = (xr yr - xi yi) + i (xr yi + xi yr)
  __m256d same = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d vy = _mm256_loadu_pd(as_doubles(y + i));
    same = _mm256_fmadd_pd(vx, vy, same);
    cross = _mm256_fmadd_pd(vx, swap_pairs(vy), cross);
  }
  double re = hsum_even(same) - hsum_odd(same);
  double im = hsum_even(cross) + hsum_odd(cross);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy(cd a, const cd* x, cd* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d vy = _mm256_loadu_pd(as_doubles(y + i));
    _mm256_storeu_pd(as_doubles(y + i), _mm256_add_pd(vy, cmul(ar, ai, vx)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = {y[i].real() + a.real() * xr - a.imag() * xi, y[i].imag() + a.real() * xi + a.imag() * xr};
  }
}

void rot(cd* x, cd* y, std::size_t n, double c, cd a, cd b) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real());
  const __m256d bi = _mm256_set1_pd(b.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d vy = _mm256_loadu_pd(as_doubles(y + i));
    const __m256d nx = _mm256_fmadd_pd(vc, vx, cmul(ar, ai, vy));
    const __m256d ny = _mm256_fmadd_pd(vc, vy, cmul(br, bi, vx));
    _mm256_storeu_pd(as_doubles(x + i), nx);
    _mm256_storeu_pd(as_doubles(y + i), ny);
  }
  for (; i < n; ++i) {
    const cd xi = x[i], yi = y[i];
    x[i] = c * xi + a * yi;
    y[i] = b * xi + c * yi;
  }
}

double nrm2sq(const cd* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(as_doubles(x + i));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum_even(acc) + hsum_odd(acc);
  for (; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

}  // namespace

const KernelTable table{Backend::Avx2, dotc, dotu, axpy, rot, nrm2sq};

}  // namespace numrad::simd::avx2
