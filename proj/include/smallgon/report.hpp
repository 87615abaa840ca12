#pragma once

#include <vector>

#include "smallgon/asymptotics.hpp"

namespace smallgon {

/// a pi/n + b pi/n^2 - c pi/n^3.
double alpha_hat_series(int n);

/// One row of the area table plus the two scaled gaps.
struct GapReport {
  int n = 0;
  double alpha_hat = 0.0;
  double area_regular = 0.0;
  double area_regular_plus = 0.0;
  double area_mn = 0.0;
  /// Equals area_mn at n = 6, where the two Mossinghoff variants coincide.
  double area_mn_prime = 0.0;
  double area_bn = 0.0;
  double upper_bound = 0.0;
  double scaled_gap_ub = 0.0;  ///< n^3 (upper_bound - area_bn)
  double scaled_gap_mn = 0.0;  ///< n^5 (area_bn - area_mn) / (3 pi^3)
};

GapReport gap_report(int n);

/// Rows for n = 6, 8, ..., n_max.
std::vector<GapReport> table1(int n_max);

/// n^3 (upper_bound(n) - A(B_n)); tends to kBoundGapLimit.
double gap_vs_bound(int n);

/// n^5 (A(B_n) - A(M_n)) / (3 pi^3); tends to d(n mod 4).
double gap_vs_mossinghoff(int n);

/// n^5 (A(B_n) - f(a pi/n + u pi/n^2)); tends to penalty_coefficient() (u - b)^2.
double perturbation_penalty(int n, double u);

}  // namespace smallgon
