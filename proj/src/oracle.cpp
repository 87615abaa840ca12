#include "smallgon/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "smallgon/constructions.hpp"
#include "smallgon/errors.hpp"
#include "smallgon/geometry.hpp"
#include "smallgon/numerics.hpp"

namespace smallgon {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kPerturbedStarts = 8;

}  // namespace

const std::map<int, double>& known_optima() {
  static const std::map<int, double> table{
      {6, 0.674981}, {8, 0.726868}, {10, 0.749137}, {12, 0.760729}};
  return table;
}

double fan_area(std::span<const double> angles) {
  const std::size_t m = angles.size();
  std::vector<double> x(m + 1, 0.0);
  std::vector<double> y(m + 1, 0.0);
  double heading = 0.0;
  for (std::size_t k = 1; k < m; ++k) {
    heading += angles[k - 1];
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    x[k] = x[k - 1] + sign * std::sin(heading);
    y[k] = y[k - 1] + sign * std::cos(heading);
  }
  x[m] = -x[m - 1];
  y[m] = y[m - 1];

  double area = x[1];
  for (std::size_t k = 2; k < m; ++k) area += x[k + 1] * y[k - 1] - y[k + 1] * x[k - 1];
  return area;
}

double full_area(int n, std::span<const double> free_angles) {
  if (n < 6 || n % 2 != 0) throw std::invalid_argument("full_area needs even n >= 6");
  if (free_angles.size() + 2 != static_cast<std::size_t>(n / 2)) {
    throw std::invalid_argument("full_area needs n/2 - 2 free angles");
  }
  double used = 0.0;
  for (double a : free_angles) {
    if (!(a > 0.0 && a < std::numbers::pi / 2)) return kNegInf;
    used += a;
  }
  const double remaining = std::numbers::pi / 2 - used;
  if (!(remaining > 0.0)) return kNegInf;

  try {
    const TailClosure closed = close_tail(n, free_angles, remaining / 2, remaining / 2);
    const AngleSequence seq(closed.angles);
    if (diameter(vertices_from_angles(seq)).length > 1.0 + kVerifyTol) return kNegInf;
    return fan_area(closed.angles);
  } catch (const NewtonFailed&) {
    return kNegInf;
  } catch (const MalformedSequence&) {
    return kNegInf;
  }
}

OracleResult solve_optimal(int n) {
  if (!known_optima().contains(n)) {
    throw std::invalid_argument("oracle runs only for n in {6, 8, 10, 12}, got " + std::to_string(n));
  }
  const ConstructionResult bn = construct_bn(n);
  const Eigen::Index free_count = n / 2 - 2;
  Eigen::VectorXd start(free_count);
  for (Eigen::Index i = 0; i < free_count; ++i) start[i] = bn.angles[static_cast<std::size_t>(i)];

  const auto objective = [n](const Eigen::VectorXd& v) {
    return full_area(n, std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
  };

  SimplexOptions options;
  options.initial_step = 0.02;
  SimplexResult best = maximize_simplex(objective, start, options);

  std::mt19937 rng(options.seed);
  std::uniform_real_distribution<double> wobble(-0.03, 0.03);
  for (int s = 0; s < kPerturbedStarts; ++s) {
    Eigen::VectorXd guess = start;
    for (Eigen::Index i = 0; i < free_count; ++i) guess[i] *= 1.0 + wobble(rng);
    SimplexResult run = maximize_simplex(objective, guess, options);
    if (run.value > best.value) best = std::move(run);
  }

  const std::span<const double> head(best.x.data(), static_cast<std::size_t>(best.x.size()));
  double used = 0.0;
  for (double a : head) used += a;
  const double remaining = std::numbers::pi / 2 - used;
  OracleResult out;
  out.angles = close_tail(n, head, remaining / 2, remaining / 2).angles;
  out.area = best.value;
  out.converged = best.converged;
  return out;
}

}  // namespace smallgon
