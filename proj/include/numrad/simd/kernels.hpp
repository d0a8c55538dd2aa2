#pragma once

// Complex double inner-loop kernels. Each kernel has a portable scalar
// reference and, on x86-64, an AVX2+FMA variant. The variant is picked once at
// startup from cpuid; NUMRAD_SIMD=scalar|avx2 in the environment overrides it.
//
// All kernels operate on contiguous interleaved (re, im) storage, which is the
// layout std::complex<double> guarantees.

#include <complex>
#include <cstddef>
#include <string_view>

namespace numrad::simd {

using cd = std::complex<double>;

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  Backend backend;
  /// sum conj(x_i) * y_i
  cd (*dotc)(const cd* x, const cd* y, std::size_t n);
  /// sum x_i * y_i
  cd (*dotu)(const cd* x, const cd* y, std::size_t n);
  /// y += a * x
  void (*axpy)(cd a, const cd* x, cd* y, std::size_t n);
  /// (x, y) <- (c x + a y, b x + c y), c real.
  void (*rot)(cd* x, cd* y, std::size_t n, double c, cd a, cd b);
  /// sum |x_i|^2
  double (*nrm2sq)(const cd* x, std::size_t n);
};

/// Active kernel table.
const KernelTable& kernels() noexcept;

bool backend_available(Backend b) noexcept;

/// Table for a specific backend, or nullptr if it is unavailable here.
const KernelTable* table_for(Backend b) noexcept;

/// Force a backend (tests, benchmarks). Returns false if it is unavailable on this CPU.
bool set_backend(Backend b) noexcept;

Backend active_backend() noexcept;

std::string_view backend_name(Backend b) noexcept;

}  // namespace numrad::simd
