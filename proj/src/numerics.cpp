#include "smallgon/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "smallgon/errors.hpp"

namespace smallgon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double finite_or_neg_inf(double v) { return std::isfinite(v) ? v : -kInf; }

// Fourth-order central difference.
double stencil_derivative(const ScalarFunction& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

// Power of two nearest fd_step * max(1, |x|), so that x +- step and the
// difference quotient carry no extra rounding.
double power_of_two_step(double fd_step, double x) {
  const double target = fd_step * std::max(1.0, std::abs(x));
  return std::exp2(std::round(std::log2(target)));
}

double max_norm(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

ScalarOptResult maximize_scalar(const ScalarFunction& objective, double lo, double hi,
                                const ScalarOptions& options) {
  if (!(lo < hi)) throw MaximizerFailed("empty interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const int samples = std::max(options.samples, 3);
  const double width = hi - lo;
  const double spacing = width / (samples - 1);

  int best = 0;
  double best_value = -kInf;
  for (int i = 0; i < samples; ++i) {
    const double v = finite_or_neg_inf(objective(lo + i * spacing));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best_value == -kInf) throw MaximizerFailed("objective is not finite anywhere on the sample grid");
  if (best == 0 || best == samples - 1) {
    throw NoInteriorMax("best sample sits at the " + std::string(best == 0 ? "lower" : "upper") +
                        " end of [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }

  ScalarOptResult result;
  result.bracket_lo = lo + (best - 1) * spacing;
  result.bracket_hi = lo + (best + 1) * spacing;

  const auto negated = [&](double x) { return -finite_or_neg_inf(objective(x)); };
  std::uintmax_t brent_iters = static_cast<std::uintmax_t>(options.max_iterations);
  const auto [x_brent, neg_f_brent] = boost::math::tools::brent_find_minima(
      negated, result.bracket_lo, result.bracket_hi, std::numeric_limits<double>::digits / 2, brent_iters);
  result.x_star = x_brent;
  result.f_star = -neg_f_brent;
  result.iterations = static_cast<int>(brent_iters);

  // Stationarity polish: find a sign change of the derivative around the
  // Brent estimate, then shrink that bracket to xtol.
  const double h = 1e-3 * width;
  const auto slope = [&](double x) { return stencil_derivative(objective, x, h); };
  const double half_bracket = spacing;
  double delta = std::max(1e-7 * width, 8 * std::numeric_limits<double>::epsilon() * std::abs(x_brent));
  double left = 0.0;
  double right = 0.0;
  bool bracketed = false;
  while (delta <= half_bracket) {
    left = x_brent - delta;
    right = x_brent + delta;
    if (slope(left) > 0.0 && slope(right) < 0.0) {
      bracketed = true;
      break;
    }
    delta *= 4;
  }
  if (!bracketed) return result;

  std::uintmax_t root_iters = static_cast<std::uintmax_t>(options.max_iterations);
  const double xtol = options.xtol;
  const auto [a, b] = boost::math::tools::toms748_solve(
      slope, left, right, [xtol](double u, double v) { return std::abs(v - u) <= xtol; }, root_iters);
  const double x_polished = a + (b - a) / 2;
  result.x_star = x_polished;
  result.f_star = objective(x_polished);
  result.iterations += static_cast<int>(root_iters);
  return result;
}

NewtonResult newton_solve(const VectorFunction& system, const Eigen::VectorXd& guess,
                          const NewtonOptions& options) {
  NewtonResult out;
  out.x = guess;
  Eigen::VectorXd fx = system(out.x);
  if (fx.size() != guess.size()) throw NewtonFailed("system is not square");
  out.residual = max_norm(fx);

  const Eigen::Index k = guess.size();
  Eigen::MatrixXd jacobian(k, k);
  while (true) {
    if (!std::isfinite(out.residual)) throw NewtonFailed("residual is not finite");
    if (out.residual <= options.tol) return out;
    if (out.iterations >= options.max_iterations) {
      throw NewtonFailed("no convergence after " + std::to_string(out.iterations) +
                         " iterations (residual " + std::to_string(out.residual) + ")");
    }

    for (Eigen::Index j = 0; j < k; ++j) {
      const double step = power_of_two_step(options.fd_step, out.x[j]);
      Eigen::VectorXd plus = out.x;
      Eigen::VectorXd minus = out.x;
      plus[j] += step;
      minus[j] -= step;
      jacobian.col(j) = (system(plus) - system(minus)) / (2 * step);
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(jacobian);
    const double rcond = lu.rcond();
    if (!(rcond * options.max_condition >= 1.0)) {
      throw NewtonFailed("singular Jacobian (reciprocal condition " + std::to_string(rcond) + ")");
    }
    const Eigen::VectorXd dx = lu.solve(-fx);

    double lambda = 1.0;
    Eigen::VectorXd trial = out.x + dx;
    Eigen::VectorXd f_trial = system(trial);
    for (int halvings = 0; halvings < 12 && !(max_norm(f_trial) < out.residual); ++halvings) {
      lambda /= 2;
      trial = out.x + lambda * dx;
      f_trial = system(trial);
    }
    out.x = std::move(trial);
    fx = std::move(f_trial);
    out.residual = max_norm(fx);
    ++out.iterations;
  }
}

namespace {

struct SimplexVertex {
  Eigen::VectorXd x;
  double cost = kInf;  // negated objective
};

class NelderMead {
 public:
  NelderMead(const MultivariateObjective& objective, const SimplexOptions& options, int& evaluations)
      : objective_(objective), options_(options), evaluations_(evaluations) {}

  SimplexVertex evaluate(Eigen::VectorXd x) {
    ++evaluations_;
    const double v = objective_(x);
    return {std::move(x), std::isfinite(v) ? -v : kInf};
  }

  // Returns true on convergence, false when the evaluation budget runs out.
  bool run(std::vector<SimplexVertex>& simplex) {
    const auto by_cost = [](const SimplexVertex& a, const SimplexVertex& b) { return a.cost < b.cost; };
    const std::size_t d = simplex.size() - 1;
    while (evaluations_ < options_.max_evaluations) {
      std::sort(simplex.begin(), simplex.end(), by_cost);
      if (converged(simplex)) return true;

      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(simplex.front().x.size());
      for (std::size_t i = 0; i < d; ++i) centroid += simplex[i].x;
      centroid /= static_cast<double>(d);

      SimplexVertex& worst = simplex.back();
      const SimplexVertex reflected = evaluate(centroid + (centroid - worst.x));
      if (reflected.cost < simplex.front().cost) {
        SimplexVertex expanded = evaluate(centroid + 2.0 * (centroid - worst.x));
        worst = expanded.cost < reflected.cost ? std::move(expanded) : reflected;
        continue;
      }
      if (reflected.cost < simplex[d - 1].cost) {
        worst = reflected;
        continue;
      }
      if (reflected.cost < worst.cost) {
        SimplexVertex outside = evaluate(centroid + 0.5 * (reflected.x - centroid));
        if (outside.cost <= reflected.cost) {
          worst = std::move(outside);
          continue;
        }
      } else {
        SimplexVertex inside = evaluate(centroid + 0.5 * (worst.x - centroid));
        if (inside.cost < worst.cost) {
          worst = std::move(inside);
          continue;
        }
      }
      for (std::size_t i = 1; i <= d; ++i) {
        simplex[i] = evaluate(simplex.front().x + 0.5 * (simplex[i].x - simplex.front().x));
      }
    }
    std::sort(simplex.begin(), simplex.end(), by_cost);
    return false;
  }

 private:
  bool converged(const std::vector<SimplexVertex>& simplex) const {
    const double spread = simplex.back().cost - simplex.front().cost;
    if (!(spread <= options_.ftol)) return false;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      if (max_norm(simplex[i].x - simplex.front().x) > options_.xtol) return false;
    }
    return true;
  }

  const MultivariateObjective& objective_;
  const SimplexOptions& options_;
  int& evaluations_;
};

}  // namespace

SimplexResult maximize_simplex(const MultivariateObjective& objective, const Eigen::VectorXd& guess,
                               const SimplexOptions& options) {
  SimplexResult result;
  NelderMead solver(objective, options, result.evaluations);
  std::mt19937 rng(options.seed);
  std::uniform_real_distribution<double> jitter(0.5, 1.5);
  std::bernoulli_distribution flip(0.5);

  const Eigen::Index dim = guess.size();
  const auto step_for = [&](Eigen::Index i, double scale) {
    const double magnitude = guess[i] != 0.0 ? std::abs(guess[i]) : 1.0;
    return options.initial_step * scale * magnitude;
  };

  SimplexVertex best = solver.evaluate(guess);
  for (int round = 0; round <= options.restarts; ++round) {
    std::vector<SimplexVertex> simplex;
    simplex.reserve(static_cast<std::size_t>(dim + 1));
    simplex.push_back(best);
    for (Eigen::Index i = 0; i < dim; ++i) {
      Eigen::VectorXd x = best.x;
      if (round == 0) {
        x[i] += step_for(i, 1.0);
      } else {
        const double sign = flip(rng) ? 1.0 : -1.0;
        x[i] += sign * step_for(i, 0.5 * jitter(rng));
      }
      simplex.push_back(solver.evaluate(std::move(x)));
    }
    const bool converged = solver.run(simplex);
    if (simplex.front().cost <= best.cost) best = simplex.front();
    result.converged = converged;
    if (!converged) break;
  }

  result.x = best.x;
  result.value = -best.cost;
  return result;
}

}  // namespace smallgon
