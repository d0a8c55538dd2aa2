#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

#include "numrad/complex_matrix.hpp"

namespace numrad {

enum class Ensemble {
  Ginibre,         // i.i.d. standard complex Gaussian entries
  Normal,          // U diag(z) U*, U Haar from QR of a Ginibre draw
  NilpotentShift,  // strictly upper bidiagonal, weights |N(0,1)|
  HyponormalDiag,  // U blockdiag(z_k I) U*: T*T - TT* = 0, the only hyponormal case in finite dimension
};

Ensemble parse_ensemble(std::string_view name);  // throws BadEnsemble
std::string_view to_string(Ensemble e) noexcept;

ComplexMatrix random_matrix(Ensemble e, std::size_t dim, std::mt19937_64& rng);

/// Deterministic draw for (seed, index): the stream depends on nothing else.
ComplexMatrix random_matrix(Ensemble e, std::size_t dim, std::uint64_t seed, std::uint64_t index);

/// Haar-distributed unitary (QR of a Ginibre matrix with the phases of R removed).
ComplexMatrix haar_unitary(std::mt19937_64& rng, std::size_t n);

/// n x n shift with superdiagonal weights w_1..w_{n-1}; weights (1, 2) give [[0,1,0],[0,0,2],[0,0,0]].
ComplexMatrix shift_matrix(std::span<const double> weights);

}  // namespace numrad
