#pragma once

#include <cstdint>
#include <random>

#include "numrad/complex_matrix.hpp"

namespace numrad {

/// SplitMix64 finalizer; used to derive independent per-trial streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Generator for stream `index` under `seed`. Streams depend only on (seed, index),
/// so trials can run in any order.
inline std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0) {
  return std::mt19937_64(splitmix64(splitmix64(seed ^ splitmix64(salt)) + index));
}

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
Complex complex_gaussian(std::mt19937_64& rng);

/// Uniform on the complex unit sphere in C^n.
Vector random_unit_vector(std::mt19937_64& rng, std::size_t n);

/// Uniform tangent direction at unit x (orthogonal to x), unit length.
Vector random_tangent(std::mt19937_64& rng, std::span<const Complex> x);

}  // namespace numrad
