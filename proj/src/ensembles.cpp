#include "numrad/ensembles.hpp"

#include <cmath>
#include <string>

#include "numrad/random.hpp"

namespace numrad {

Complex complex_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> half(0.0, std::sqrt(0.5));
  const double re = half(rng);
  const double im = half(rng);
  return {re, im};
}

Vector random_unit_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (;;) {
    for (Complex& z : v) z = complex_gaussian(rng);
    if (norm(v) > 1e-300) return normalized(v);
  }
}

Vector random_tangent(std::mt19937_64& rng, std::span<const Complex> x) {
  for (;;) {
    Vector d = random_unit_vector(rng, x.size());
    const Complex along = inner(d, x);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= along * x[i];
    if (norm(d) > 1e-8) return normalized(d);
  }
}

Ensemble parse_ensemble(std::string_view name) {
  if (name == "ginibre") return Ensemble::Ginibre;
  if (name == "normal") return Ensemble::Normal;
  if (name == "nilpotent-shift") return Ensemble::NilpotentShift;
  if (name == "hyponormal-diag") return Ensemble::HyponormalDiag;
  throw Error(ErrorCode::BadEnsemble, "unknown ensemble '" + std::string(name) + "'");
}

std::string_view to_string(Ensemble e) noexcept {
  switch (e) {
    case Ensemble::Ginibre: return "ginibre";
    case Ensemble::Normal: return "normal";
    case Ensemble::NilpotentShift: return "nilpotent-shift";
    case Ensemble::HyponormalDiag: return "hyponormal-diag";
  }
  return "?";
}

ComplexMatrix haar_unitary(std::mt19937_64& rng, std::size_t n) {
  // Modified Gram-Schmidt on the columns of a Ginibre draw. R's diagonal comes
  // out real positive, which is exactly the normalization that makes Q Haar.
  std::vector<Vector> cols(n, Vector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = complex_gaussian(rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      const Complex proj = inner(cols[j], cols[k]);
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
    }
    cols[j] = normalized(cols[j]);
  }
  ComplexMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) q.set_column(j, cols[j]);
  return q;
}

ComplexMatrix shift_matrix(std::span<const double> weights) {
  const std::size_t n = weights.size() + 1;
  ComplexMatrix s(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) s(i, i + 1) = weights[i];
  return s;
}

ComplexMatrix random_matrix(Ensemble e, std::size_t dim, std::mt19937_64& rng) {
  if (dim == 0) throw Error(ErrorCode::BadConfig, "dimension must be positive");
  switch (e) {
    case Ensemble::Ginibre: {
      ComplexMatrix m(dim, dim);
      for (Complex& z : m.entries()) z = complex_gaussian(rng);
      return m;
    }
    case Ensemble::Normal: {
      const ComplexMatrix u = haar_unitary(rng, dim);
      Vector d(dim);
      for (Complex& z : d) z = complex_gaussian(rng);
      return u * ComplexMatrix::diagonal(std::span<const Complex>(d)) * adjoint(u);
    }
    case Ensemble::NilpotentShift: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      std::vector<double> w(dim - 1);
      for (double& x : w) x = std::abs(gauss(rng));
      return shift_matrix(w);
    }
    case Ensemble::HyponormalDiag: {
      const ComplexMatrix u = haar_unitary(rng, dim);
      Vector d(dim);
      std::uniform_int_distribution<std::size_t> block(1, std::max<std::size_t>(1, dim / 2));
      for (std::size_t i = 0; i < dim;) {
        const Complex z = complex_gaussian(rng);
        const std::size_t len = std::min(block(rng), dim - i);
        for (std::size_t k = 0; k < len; ++k) d[i + k] = z;
        i += len;
      }
      return u * ComplexMatrix::diagonal(std::span<const Complex>(d)) * adjoint(u);
    }
  }
  throw Error(ErrorCode::BadEnsemble, "unhandled ensemble");
}

ComplexMatrix random_matrix(Ensemble e, std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  auto rng = stream(seed, index, static_cast<std::uint64_t>(e) + 1);
  return random_matrix(e, dim, rng);
}

}  // namespace numrad
