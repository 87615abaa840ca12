#include <cmath>
#include <numbers>

#include "smallgon/asymptotics.hpp"

namespace smallgon {

namespace {

AsymptoticConstants evaluate_constants() {
  constexpr double pi = std::numbers::pi;
  const double pi2 = pi * pi;
  const double r = std::sqrt(114.0);

  AsymptoticConstants k;
  k.a = (2 * r - 7) / 22;
  k.b = (3521 * r - 34010) / 9196;
  k.c = (17328 * (663157 + 3161 * pi2) - (1088031703 - 3918085 * pi2) * r) / 507398496;

  const double t_even = (103104 * r - 998743) / 200255;
  const double t_alt = 15 * pi * (347 * r - 714) / 1762244;
  k.t_mod0 = t_even + t_alt;
  k.t_mod2 = t_even - t_alt;

  const double d_even = 25 * pi2 * (1747646 - 22523 * r) / 4691093528.0 +
                        (32717202988.0 - 3004706459.0 * r) / 29464719680.0;
  const double d_alt = 15 * pi * (10124777 - 919131 * r) / 852926096;
  k.d_mod0 = d_even + d_alt;
  k.d_mod2 = d_even - d_alt;
  return k;
}

}  // namespace

const AsymptoticConstants& asymptotic_constants() {
  static const AsymptoticConstants constants = evaluate_constants();
  return constants;
}

double bound_gap_limit_from_radicals() {
  constexpr double pi = std::numbers::pi;
  return (5303 - 456 * std::sqrt(114.0)) * pi * pi * pi / 5808;
}

double penalty_coefficient() {
  constexpr double pi = std::numbers::pi;
  return pi * pi * pi * std::sqrt(114.0) / 8;
}

double regular_gap_limit() {
  constexpr double pi = std::numbers::pi;
  return pi * pi * pi / 16;
}

double regular_plus_gap_limit() {
  constexpr double pi = std::numbers::pi;
  return 5 * pi * pi * pi / 48;
}

}  // namespace smallgon
