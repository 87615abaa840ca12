#include "smallgon/thin_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "smallgon/errors.hpp"

namespace smallgon {

namespace {

void require_even_n(int n) {
  if (n < 6 || n % 2 != 0) {
    throw std::invalid_argument("thin model needs even n >= 6, got " + std::to_string(n));
  }
}

double closure_rhs(double alpha, double beta) {
  return std::sin(alpha) + std::sin(alpha + 1.5 * beta) / (2 * std::cos(beta / 2));
}

}  // namespace

double TriangleAreas::polygon_area() const {
  double sum = 0.0;
  for (double a : values) sum += a;
  return 2 * sum;
}

double angle_sum_residual(const ThinParams& p) {
  return p.alpha + (p.n / 2 - 1) * p.beta - std::numbers::pi / 2;
}

double closure_residual(const ThinParams& p) {
  return std::sin(p.alpha + p.beta + p.gamma) - closure_rhs(p.alpha, p.beta);
}

double beta_from_alpha(int n, double alpha) {
  require_even_n(n);
  return (std::numbers::pi / 2 - alpha) / (n / 2 - 1);
}

double gamma_from_alpha_beta(double alpha, double beta) {
  const double s = closure_rhs(alpha, beta);
  if (!(std::abs(s) <= 1.0)) {
    throw InfeasibleAlpha("closure needs sin(alpha+beta+gamma) = " + std::to_string(s) +
                          " (alpha = " + std::to_string(alpha) + ", beta = " + std::to_string(beta) + ")");
  }
  return std::asin(s) - alpha - beta;
}

ThinParams thin_params(int n, double alpha) {
  const double beta = beta_from_alpha(n, alpha);
  return {n, alpha, beta, gamma_from_alpha_beta(alpha, beta)};
}

double thin_area(const ThinParams& p) {
  require_even_n(p.n);
  const double a = p.alpha;
  const double b = p.beta;
  const double g = p.gamma;
  double area = std::sin(a) + std::sin(2 * b) - std::sin(b + g);
  if (p.n == 6) return area;
  const double half_tan = std::tan(b / 2);
  area += (p.n / 2 - 3) * (std::sin(b) - half_tan);
  area += (std::cos(b - g) - std::cos(2 * b) - 0.5) * half_tan;
  return area;
}

TriangleAreas triangle_areas(const ThinParams& p) {
  require_even_n(p.n);
  const double a = p.alpha;
  const double b = p.beta;
  const double g = p.gamma;
  const int m = p.n / 2;

  TriangleAreas out;
  out.values.reserve(static_cast<std::size_t>(m - 1));
  out.values.push_back(std::sin(a) / 2);
  out.values.push_back((std::sin(2 * b) - std::sin(b + g)) / 2);
  const double base = std::sin(b) - std::tan(b / 2);
  const double half_sin = std::sin(b / 2);
  const double lead = 2 * std::sin((b + g) / 2);
  for (int k = 3; k <= m - 1; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^(k-1)
    const double bracket = lead * std::sin((k - 1) * b - g / 2) - std::cos((k - 2) * b) / (2 * std::cos(b / 2));
    out.values.push_back((base + 2 * sign * bracket * half_sin) / 2);
  }
  return out;
}

double thin_objective(int n, double alpha) { return thin_area(thin_params(n, alpha)); }

AngleSequence thin_angles(const ThinParams& p) {
  require_even_n(p.n);
  std::vector<double> angles(static_cast<std::size_t>(p.n / 2), p.beta);
  angles[0] = p.alpha;
  angles[1] = p.beta + p.gamma;
  angles[2] = p.beta - p.gamma;
  return AngleSequence(std::move(angles));
}

Polygon thin_polygon(const ThinParams& p) { return vertices_from_angles(thin_angles(p)); }

AlphaInterval alpha_search_interval(int n) {
  require_even_n(n);
  return {std::numbers::pi / (2 * n - 2), std::numbers::pi / n};
}

}  // namespace smallgon
