#pragma once

#include <vector>

#include "smallgon/geometry.hpp"

namespace smallgon {

/// Reduced model: turning angles (alpha, beta+gamma, beta-gamma, beta, ..., beta).
struct ThinParams {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Fan triangle areas A_1 ... A_{n/2-1}; the polygon area is twice their sum.
struct TriangleAreas {
  std::vector<double> values;

  double polygon_area() const;
};

/// Residual of alpha + (n/2 - 1) beta = pi/2.
double angle_sum_residual(const ThinParams& p);

/// Residual of sin(alpha+beta+gamma) = sin(alpha) + sin(alpha + 3beta/2) / (2cos(beta/2)),
/// the condition that makes the middle edge horizontal with length 1.
double closure_residual(const ThinParams& p);

double beta_from_alpha(int n, double alpha);

/// Principal-branch arcsin solve of the closure condition.
/// Throws InfeasibleAlpha when the right-hand side leaves [-1, 1].
double gamma_from_alpha_beta(double alpha, double beta);

/// Solves beta and gamma for a given alpha.
ThinParams thin_params(int n, double alpha);

/// Closed-form area of the thin polygon. For n = 6 only the first three
/// terms apply.
double thin_area(const ThinParams& p);

TriangleAreas triangle_areas(const ThinParams& p);

/// One-variable area objective f(alpha).
double thin_objective(int n, double alpha);

/// Expanded angle list (alpha, beta+gamma, beta-gamma, beta, ..., beta).
AngleSequence thin_angles(const ThinParams& p);

Polygon thin_polygon(const ThinParams& p);

/// Interval [pi/(2n-2), pi/n] searched for the maximizer of f.
struct AlphaInterval {
  double lo = 0.0;
  double hi = 0.0;
};
AlphaInterval alpha_search_interval(int n);

}  // namespace smallgon
