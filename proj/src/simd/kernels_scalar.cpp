// Portable reference kernels. These define the semantics the SIMD variants are
// tested against.

#include "tables.hpp"

namespace numrad::simd::scalar {
namespace {

cd dotc(const cd* x, const cd* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cd dotu(const cd* x, const cd* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy(cd a, const cd* x, cd* y, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = {y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr};
  }
}

void rot(cd* x, cd* y, std::size_t n, double c, cd a, cd b) {
  for (std::size_t i = 0; i < n; ++i) {
    const cd xi = x[i], yi = y[i];
    x[i] = c * xi + a * yi;
    y[i] = b * xi + c * yi;
  }
}

double nrm2sq(const cd* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

}  // namespace

const KernelTable table{Backend::Scalar, dotc, dotu, axpy, rot, nrm2sq};

}  // namespace numrad::simd::scalar
