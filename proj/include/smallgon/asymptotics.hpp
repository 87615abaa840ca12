#pragma once

namespace smallgon {

/// Constants of the large-n expansions, evaluated from their exact radical
/// expressions. Quantities with two variants depend on n mod 4.
struct AsymptoticConstants {
  double a = 0.0;  ///< leading coefficient of the maximizer, (2 sqrt(114) - 7) / 22
  double b = 0.0;  ///< second-order coefficient of the maximizer
  double c = 0.0;  ///< third-order coefficient (enters with a minus sign)
  double t_mod2 = 0.0;
  double t_mod0 = 0.0;
  double d_mod2 = 0.0;
  double d_mod0 = 0.0;

  double t(int n) const { return n % 4 == 0 ? t_mod0 : t_mod2; }
  double d(int n) const { return n % 4 == 0 ? d_mod0 : d_mod2; }
};

const AsymptoticConstants& asymptotic_constants();

/// (5303 - 456 sqrt(114)) pi^3 / 5808: limit of n^3 (upper bound - A(B_n)).
/// Evaluated once in 40-digit arithmetic and stored.
inline constexpr double kBoundGapLimit = 2.3182760833762246246;

/// Double evaluation of the same expression, for cross-checking the literal.
double bound_gap_limit_from_radicals();

/// pi^3 sqrt(114) / 8: coefficient of (u - b)^2 in the perturbation penalty.
double penalty_coefficient();

/// pi^3 / 16: limit of n^2 (upper bound - A(R_n)).
double regular_gap_limit();

/// 5 pi^3 / 48: limit of n^3 (upper bound - A(R_{n-1}^+)).
double regular_plus_gap_limit();

}  // namespace smallgon
