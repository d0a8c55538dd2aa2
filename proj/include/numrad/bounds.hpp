#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "numrad/complex_matrix.hpp"
#include "numrad/golden_section.hpp"
#include "numrad/linalg.hpp"
#include "numrad/radius.hpp"

namespace numrad {

enum class BoundId {
  TH1,
  COR1_GAMMA,
  COR1_DELTA,
  COR1_MIN,
  TH2,
  PP0,
  TH3,
  COR3,
  COR4,
  EQN5,
  KITTANEH_SUM,
  KITTANEH_MODULI,
  TH4,
  IMPR1,
  LOW1,
  LOW4,
};

enum class BoundKind { UpperOnWSquared, UpperOnW, LowerOnW };

std::string_view to_string(BoundId id) noexcept;
std::string_view to_string(BoundKind kind) noexcept;
BoundKind kind_of(BoundId id) noexcept;
/// One-line formula description, used by the report renderer.
std::string_view describe(BoundId id) noexcept;

struct BoundValue {
  BoundId id;
  BoundKind kind;
  double value = 0.0;               // native scale (w^2 for UpperOnWSquared)
  std::optional<double> alpha_at;   // present iff minimized over alpha
  std::optional<double> r_at;       // Kato/Kittaneh power-family exponent, if scanned

  bool is_upper() const noexcept { return kind != BoundKind::LowerOnW; }
  double on_w_scale() const noexcept;
};

/**
 * Shared ingredients for every catalog bound of one operator T: the polar
 * moduli, their squares, the Gram eigendecompositions (for the power family),
 * and the two numerical radii the Buzano-type bounds need. The radii are
 * computed on first use.
 */
class BoundContext {
 public:
  BoundContext(const ComplexMatrix& t, double radius_tol = 1e-10);

  const ComplexMatrix& op() const noexcept { return t_; }
  double norm() const noexcept { return norm_; }
  double radius_tol() const noexcept { return radius_tol_; }
  const ComplexMatrix& abs() const noexcept { return abs_; }
  const ComplexMatrix& abs_star() const noexcept { return abs_star_; }
  const ComplexMatrix& abs_sq() const noexcept { return abs_sq_; }            // T*T
  const ComplexMatrix& abs_star_sq() const noexcept { return abs_star_sq_; }  // TT*
  const HermitianEig& gram_right() const noexcept { return gram_right_; }
  const HermitianEig& gram_left() const noexcept { return gram_left_; }

  /// ||Re(|T| |T*|)||
  double re_abs_product_norm() const noexcept { return re_abs_product_norm_; }

  /// w(|T| + i |T*|) and w(|T| |T*|), certified brackets.
  const RadiusBracket& radius_abs_sum() const;
  const RadiusBracket& radius_abs_product() const;

 private:
  ComplexMatrix t_;
  double radius_tol_;
  double norm_;
  HermitianEig gram_right_, gram_left_;
  ComplexMatrix abs_, abs_star_, abs_sq_, abs_star_sq_;
  double re_abs_product_norm_;
  mutable std::optional<RadiusBracket> w_abs_sum_, w_abs_product_;
};

/// Upper bound on ||T||_alpha^2 with f(t) = t^r, g(t) = t^{1-r}.
double bound_th1(const BoundContext& ctx, double alpha, double r);
double bound_th1(const ComplexMatrix& t, double alpha, double r);

struct GammaDelta {
  double gamma = 0.0;
  double delta = 0.0;
  double alpha_gamma = 0.0;
  double alpha_delta = 0.0;
};

GammaDelta gamma_delta(const BoundContext& ctx);
GammaDelta gamma_delta(const ComplexMatrix& t);

/// min{ ||alpha |T|^2 + (1-alpha)|T*|^2||, ||alpha |T*|^2 + (1-alpha)|T|^2|| }
double bound_th2(const BoundContext& ctx, double alpha);
double bound_th2(const ComplexMatrix& t, double alpha);

/// min over alpha of ||alpha |T|^2 + (1-alpha)|T*|^2||
LineMin pp0_min(const BoundContext& ctx);
LineMin pp0_min(const ComplexMatrix& t);

struct Th3Family {
  double th3 = 0.0;
  double cor3 = 0.0;
  double cor4 = 0.0;
};

/// The Buzano-type family at a fixed alpha. Radius terms use bracket upper ends.
Th3Family bound_th3_family(const BoundContext& ctx, double alpha);
Th3Family bound_th3_family(const ComplexMatrix& t, double alpha);

struct Eqn5Classics {
  double eqn5 = 0.0;             // on w^2
  double kittaneh_sum = 0.0;     // (1/2) ||T*T + TT*||, on w^2
  double kittaneh_moduli = 0.0;  // (1/2) || |T| + |T*| ||, on w
};

Eqn5Classics eqn5_and_classics(const BoundContext& ctx);
Eqn5Classics eqn5_and_classics(const ComplexMatrix& t);

struct Th4Impr1 {
  double inner_min = 0.0;  // min over alpha of ||alpha |T| + (1-alpha) |T*|||
  double alpha_at = 0.5;
  double impr1 = 0.0;      // sqrt(inner_min ||T||), on w
};

Th4Impr1 bound_th4_impr1(const BoundContext& ctx);
Th4Impr1 bound_th4_impr1(const ComplexMatrix& t);

/// ||alpha |T| + (1-alpha)|T*||| ||T||, an upper bound on w^2 for every fixed alpha.
double bound_th4(const BoundContext& ctx, double alpha);

struct LowerGeneral {
  double low1 = 0.0;  // max{||Re T||, ||Im T||}
  double low4 = 0.0;  // max{||Re T + Im T||, ||Re T - Im T||} / sqrt(2)
};

LowerGeneral lower_general(const ComplexMatrix& t);

struct BoundReport {
  RadiusBracket w_bracket;
  double norm = 0.0;
  std::vector<BoundValue> entries;
  BoundId tightest_upper = BoundId::COR1_MIN;
  BoundId tightest_lower = BoundId::LOW1;

  const BoundValue& entry(BoundId id) const;
};

/// Default r grid when scanning the power family.
inline constexpr double kPowerFamilyGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};

/// Every catalog bound on one matrix, normalized and ranked. Throws on numerical failure.
BoundReport bound_report(const ComplexMatrix& t, double tol = 1e-9);
/// Same, reusing a context; the w bracket is computed at ctx.radius_tol().
BoundReport bound_report(const BoundContext& ctx);

}  // namespace numrad
