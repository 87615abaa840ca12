#pragma once

#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace smallgon {

using ScalarFunction = std::function<double(double)>;
using VectorFunction = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using MultivariateObjective = std::function<double(const Eigen::VectorXd&)>;

struct ScalarOptResult {
  double x_star = 0.0;
  double f_star = 0.0;
  int iterations = 0;
  /// Sample bracket that contained the best grid point.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

struct ScalarOptions {
  double xtol = 1e-14;
  int samples = 64;
  int max_iterations = 200;
};

/// Maximizes a smooth univariate function on [lo, hi].
///
/// The interval is first sampled on an equispaced grid; the best sample and
/// its neighbours form the bracket. Golden-section search with parabolic
/// steps then localizes the maximum to about sqrt(machine epsilon), which is
/// the resolution limit of comparing function values near a flat peak.
/// The final digits come from bracketing the zero of a fourth-order central
/// difference of the objective. Objective values may be requested slightly
/// outside [lo, hi] during that stage.
///
/// Throws NoInteriorMax if the best sample is an endpoint of [lo, hi].
ScalarOptResult maximize_scalar(const ScalarFunction& objective, double lo, double hi,
                                const ScalarOptions& options = {});

struct NewtonOptions {
  double tol = 1e-14;
  int max_iterations = 50;
  double fd_step = 1e-7;  ///< rounded to the nearest power of two
  double max_condition = 1e12;
};

struct NewtonResult {
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
};

/// Newton's method with a central finite-difference Jacobian and step halving.
/// Stops once the max-norm residual is at most options.tol.
/// Throws NewtonFailed on the iteration cap, non-finite residuals, or a
/// Jacobian whose condition estimate exceeds options.max_condition.
NewtonResult newton_solve(const VectorFunction& system, const Eigen::VectorXd& guess,
                          const NewtonOptions& options = {});

struct SimplexOptions {
  double ftol = 1e-12;
  double xtol = 1e-9;
  double initial_step = 0.05;
  int restarts = 3;
  int max_evaluations = 40000;
  std::uint32_t seed = 0x5eed2021u;
};

struct SimplexResult {
  Eigen::VectorXd x;
  double value = 0.0;
  bool converged = false;
  int evaluations = 0;
};

/// Nelder-Mead ascent. After the first run converges the search restarts
/// `restarts` times from a randomly perturbed simplex around the incumbent;
/// the perturbations come from a fixed-seed generator. Objective values of
/// -inf or NaN mark infeasible points.
SimplexResult maximize_simplex(const MultivariateObjective& objective, const Eigen::VectorXd& guess,
                               const SimplexOptions& options = {});

}  // namespace smallgon
