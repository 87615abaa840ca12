#pragma once

#include <map>
#include <span>
#include <vector>

namespace smallgon {

/// Known maximal areas of small n-gons for even n <= 12 (six printed decimals).
const std::map<int, double>& known_optima();

/// Polygon area from the vertex coordinates of a full angle list, summing
/// the fan triangles v_0 v_{k+1} v_{k-1} (and v_0 v_1 v_{n-1}) on one side.
double fan_area(std::span<const double> angles);

/// Area with alpha_0 ... alpha_{n/2-3} free and the last two angles solved
/// from the angle sum and the middle-edge closure. Returns -infinity when
/// the closing solve fails, an angle is not in (0, pi/2), or the polygon
/// has a vertex pair farther apart than one.
double full_area(int n, std::span<const double> free_angles);

struct OracleResult {
  std::vector<double> angles;  ///< all n/2 turning angles
  double area = 0.0;
  bool converged = false;
};

/// Nelder-Mead over the free angles, started from the B_n angles and from
/// eight deterministic perturbations of them. n must be 6, 8, 10 or 12.
OracleResult solve_optimal(int n);

}  // namespace smallgon
