#pragma once

#include "numrad/complex_matrix.hpp"
#include "numrad/linalg.hpp"

namespace numrad {

/// Outcome of the four scalar inequalities the catalog proofs lean on.
/// Each slack is (right side - left side); an inequality holds when its slack
/// is at least -1e-9 max(1, ||T||^2).
struct IngredientChecks {
  bool kato = false;
  bool kittaneh_fg = false;
  bool mccarthy = false;
  bool buzano = false;
  double kato_slack = 0.0;
  double kittaneh_fg_slack = 0.0;
  double mccarthy_slack = 0.0;
  double buzano_slack = 0.0;

  bool all() const noexcept { return kato && kittaneh_fg && mccarthy && buzano; }
};

/// Per-matrix spectral data reused across many (x, y, r) samples.
class IngredientContext {
 public:
  explicit IngredientContext(const ComplexMatrix& t);

  const ComplexMatrix& op() const noexcept { return t_; }
  double norm() const noexcept { return norm_; }

  /// Throws NotUnit, BadExponent (r outside [0, 1]), DimensionMismatch.
  IngredientChecks check(std::span<const Complex> x, std::span<const Complex> y, double r) const;

 private:
  ComplexMatrix t_;
  double norm_;
  HermitianEig gram_right_, gram_left_;  // T*T, TT*
  ComplexMatrix abs_, abs_star_;
  HermitianEig abs_eig_, abs_star_eig_;  // eigendecompositions of |T|, |T*| themselves
};

/// kato:        |<Tx,y>|^2 <= <|T|^{2r} x,x> <|T*|^{2(1-r)} y,y>
/// kittaneh_fg: |<Tx,y>|^2 <= ||f(|T|) x||^2 ||g(|T*|) y||^2, f = t^r, g = t^{1-r}
/// mccarthy:    <|T| x,x>^2 <= <|T|^2 x,x>
/// buzano:      2 |<u,x><x,v>| <= ||u|| ||v|| + |<u,v>|, u = |T*| x, v = |T| x
IngredientChecks scalar_inequality_checks(const ComplexMatrix& t, std::span<const Complex> x,
                                          std::span<const Complex> y, double r);

/// <P^s x,x> - <Px,x>^s for Hermitian PSD P, unit x and s >= 1. Throws BadExponent, NotUnit.
double mccarthy_slack(const ComplexMatrix& p, std::span<const Complex> x, double s);

}  // namespace numrad
