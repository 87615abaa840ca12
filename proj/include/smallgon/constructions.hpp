#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smallgon/geometry.hpp"
#include "smallgon/thin_model.hpp"

namespace smallgon {

enum class Family { Regular, RegularPlus, Mossinghoff, MossinghoffPrime, Bn };

inline constexpr Family kAllFamilies[] = {Family::Regular, Family::RegularPlus, Family::Mossinghoff,
                                          Family::MossinghoffPrime, Family::Bn};

/// CLI spelling: regular, regular-plus, mossinghoff, mossinghoff-prime, bn.
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Smallest even n for which the family is constructed.
int min_vertex_count(Family family);

struct Diagnostics {
  double angle_sum_residual = 0.0;
  double closure_residual = 0.0;
  /// Central-difference slope of the area objective at alpha (B_n only).
  double derivative = 0.0;
  /// False when alpha was taken outside [pi/(2n-2), pi/n].
  bool alpha_in_search_interval = true;
};

struct ConstructionResult {
  Family family = Family::Bn;
  int n = 0;
  Polygon polygon;
  /// Turning angles alpha_0 ... alpha_{n/2-1}; empty for the regular n-gon.
  std::vector<double> angles;
  double area = 0.0;
  /// Reduced-model parameters, when the family is defined through them.
  std::optional<ThinParams> params;
  /// Maximizer of the area objective (B_n only).
  std::optional<double> alpha_star;
  Diagnostics diagnostics;
  int iterations = 0;
};

/// Closed-form area of the regular small n-gon, n >= 3.
double area_regular(int n);

/// Regular (n-1)-gon with one vertex added at unit distance on an angle bisector.
double area_regular_plus(int n);

/// Upper bound (n/2) sin(pi/n) - ((n-1)/2) tan(pi/(2n-2)) for even n >= 6.
double upper_bound(int n);

/// Regular n-gon of diameter 1, even n >= 4, centered at (0, 1/2).
ConstructionResult construct_regular(int n);

ConstructionResult construct_regular_plus(int n);

/// Maximizes the thin-model area over alpha in [pi/(2n-2), pi/n].
/// Throws MaximizerFailed if the maximizer cannot certify an interior
/// stationary point.
ConstructionResult construct_bn(int n);

/// Mossinghoff's polygon: the printed alpha, beta, gamma recipe for all but
/// the last two angles, which are re-solved to close the polygon.
/// Throws NewtonFailed if the closing solve does not converge.
ConstructionResult construct_mn(int n);

/// Thin-model polygon at Mossinghoff's alpha, n >= 8.
ConstructionResult construct_mn_prime(int n);

ConstructionResult construct(Family family, int n);

struct TailClosure {
  /// head followed by the two solved angles
  std::vector<double> angles;
  double residual = 0.0;
  int iterations = 0;
};

/// Solves the last two turning angles so that the angles sum to pi/2 and
/// the middle edge closes (x_{n/2-1} = (-1)^{n/2} / 2). `head` holds the
/// first n/2 - 2 angles. Throws NewtonFailed.
TailClosure close_tail(int n, std::span<const double> head, double guess_first, double guess_second);

/// Mossinghoff's (alpha, beta, gamma) before the tail re-solve.
ThinParams mossinghoff_recipe(int n);

/// Alpha used by both Mossinghoff constructions, a pi/n + t pi/n^2.
double mossinghoff_alpha(int n);

}  // namespace smallgon
