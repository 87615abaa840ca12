#include "smallgon/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "smallgon/asymptotics.hpp"
#include "smallgon/errors.hpp"
#include "smallgon/numerics.hpp"

namespace smallgon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDerivativeTol = 1e-7;

void require_even(int n, int min_n, std::string_view what) {
  if (n < min_n || n % 2 != 0) {
    throw std::invalid_argument(std::string(what) + " needs even n >= " + std::to_string(min_n) +
                                ", got " + std::to_string(n));
  }
}

// Abscissa of v_{n/2-1} from the alternating partial sums.
double middle_abscissa(std::span<const double> angles) {
  double x = 0.0;
  double heading = 0.0;
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    heading += angles[i];
    x += (i % 2 == 0 ? 1.0 : -1.0) * std::sin(heading);
  }
  return x;
}

double sum_of(std::span<const double> angles) {
  double s = 0.0;
  for (double a : angles) s += a;
  return s;
}

std::vector<double> expanded_angles(const ThinParams& p) {
  const auto seq = thin_angles(p);
  return {seq.angles().begin(), seq.angles().end()};
}

ConstructionResult from_thin(Family family, const ThinParams& p) {
  ConstructionResult r;
  r.family = family;
  r.n = p.n;
  r.params = p;
  r.angles = expanded_angles(p);
  r.polygon = vertices_from_angles(AngleSequence(r.angles));
  r.area = thin_area(p);
  r.diagnostics.angle_sum_residual = angle_sum_residual(p);
  r.diagnostics.closure_residual = closure_residual(p);
  const auto interval = alpha_search_interval(p.n);
  r.diagnostics.alpha_in_search_interval = p.alpha >= interval.lo && p.alpha <= interval.hi;
  return r;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Regular: return "regular";
    case Family::RegularPlus: return "regular-plus";
    case Family::Mossinghoff: return "mossinghoff";
    case Family::MossinghoffPrime: return "mossinghoff-prime";
    case Family::Bn: return "bn";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

int min_vertex_count(Family family) {
  switch (family) {
    case Family::Regular: return 4;
    case Family::MossinghoffPrime: return 8;
    default: return 6;
  }
}

double area_regular(int n) {
  if (n < 3) throw std::invalid_argument("regular polygon needs n >= 3");
  const double half = n / 2.0;
  if (n % 2 == 1) return half * std::sin(kPi / n) - half * std::tan(kPi / (2 * n));
  return n / 8.0 * std::sin(2 * kPi / n);
}

double area_regular_plus(int n) {
  require_even(n, 6, "regular-plus polygon");
  return area_regular(n - 1) + std::sin(kPi / (2 * n - 2)) - 0.5 * std::sin(kPi / (n - 1));
}

double upper_bound(int n) {
  require_even(n, 6, "upper bound");
  return n / 2.0 * std::sin(kPi / n) - (n - 1) / 2.0 * std::tan(kPi / (2 * n - 2));
}

ConstructionResult construct_regular(int n) {
  require_even(n, 4, "regular polygon");
  ConstructionResult r;
  r.family = Family::Regular;
  r.n = n;
  r.area = area_regular(n);
  r.polygon.vertices.resize(static_cast<std::size_t>(n));
  const auto cycle = thin_boundary_cycle(n);
  for (int p = 0; p < n; ++p) {
    const double theta = -kPi / 2 + 2 * kPi * p / n;
    Point v{0.5 * std::cos(theta), 0.5 + 0.5 * std::sin(theta)};
    if (p == 0 || 2 * p == n) v.x = 0.0;
    r.polygon.vertices[static_cast<std::size_t>(cycle[static_cast<std::size_t>(p)])] = v;
  }
  return r;
}

ConstructionResult construct_regular_plus(int n) {
  require_even(n, 6, "regular-plus polygon");
  auto r = from_thin(Family::RegularPlus, thin_params(n, kPi / (2 * n - 2)));
  r.area = area_regular_plus(n);
  return r;
}

ConstructionResult construct_bn(int n) {
  require_even(n, 6, "B_n construction");
  const auto interval = alpha_search_interval(n);
  const auto objective = [n](double alpha) { return thin_objective(n, alpha); };
  const ScalarOptResult opt = maximize_scalar(objective, interval.lo, interval.hi);
  if (!(opt.x_star > interval.lo && opt.x_star < interval.hi)) {
    throw MaximizerFailed("maximizer left the search interval at alpha = " + std::to_string(opt.x_star));
  }

  auto r = from_thin(Family::Bn, thin_params(n, opt.x_star));
  r.alpha_star = opt.x_star;
  r.iterations = opt.iterations;
  constexpr double h = 1e-6;
  r.diagnostics.derivative = (objective(opt.x_star + h) - objective(opt.x_star - h)) / (2 * h);
  if (!(std::abs(r.diagnostics.derivative) <= kDerivativeTol)) {
    throw MaximizerFailed("slope " + std::to_string(r.diagnostics.derivative) + " at alpha = " +
                          std::to_string(opt.x_star) + " is not stationary");
  }
  return r;
}

double mossinghoff_alpha(int n) {
  require_even(n, 6, "Mossinghoff alpha");
  const auto& k = asymptotic_constants();
  const double nn = n;
  return k.a * kPi / nn + k.t(n) * kPi / (nn * nn);
}

ThinParams mossinghoff_recipe(int n) {
  const auto& k = asymptotic_constants();
  const double nn = n;
  const double t = k.t(n);
  ThinParams p;
  p.n = n;
  p.alpha = mossinghoff_alpha(n);
  p.beta = kPi / nn + 2 * (1 - k.a) * kPi / (nn * nn);
  p.gamma = (2 * k.a - 1) * kPi / (4 * nn) + (k.a + t - 1) * kPi / (2 * nn * nn);
  return p;
}

TailClosure close_tail(int n, std::span<const double> head, double guess_first, double guess_second) {
  require_even(n, 6, "tail closure");
  const std::size_t half = static_cast<std::size_t>(n / 2);
  if (head.size() + 2 != half) {
    throw std::invalid_argument("tail closure needs n/2 - 2 head angles, got " + std::to_string(head.size()));
  }
  const double target_x = (n / 2) % 2 == 0 ? 0.5 : -0.5;
  std::vector<double> angles(head.begin(), head.end());
  angles.resize(half);

  const auto system = [&](const Eigen::VectorXd& tail) {
    angles[half - 2] = tail[0];
    angles[half - 1] = tail[1];
    Eigen::VectorXd residual(2);
    residual[0] = sum_of(angles) - kPi / 2;
    residual[1] = middle_abscissa(angles) - target_x;
    return residual;
  };
  const NewtonResult solved = newton_solve(system, Eigen::Vector2d(guess_first, guess_second));

  TailClosure out;
  angles[half - 2] = solved.x[0];
  angles[half - 1] = solved.x[1];
  out.angles = std::move(angles);
  out.residual = solved.residual;
  out.iterations = solved.iterations;
  return out;
}

ConstructionResult construct_mn(int n) {
  require_even(n, 6, "Mossinghoff polygon");
  const ThinParams recipe = mossinghoff_recipe(n);
  std::vector<double> pattern(static_cast<std::size_t>(n / 2), recipe.beta);
  pattern[0] = recipe.alpha;
  pattern[1] = recipe.beta + recipe.gamma;
  pattern[2] = recipe.beta - recipe.gamma;
  const std::span<const double> head(pattern.data(), pattern.size() - 2);
  const TailClosure closed = close_tail(n, head, recipe.beta, recipe.beta);

  ConstructionResult r;
  r.family = Family::Mossinghoff;
  r.n = n;
  r.params = recipe;
  r.angles = closed.angles;
  r.polygon = vertices_from_angles(AngleSequence(r.angles));
  r.area = shoelace_area(r.polygon);
  r.iterations = closed.iterations;
  r.diagnostics.angle_sum_residual = sum_of(r.angles) - kPi / 2;
  r.diagnostics.closure_residual = middle_abscissa(r.angles) - ((n / 2) % 2 == 0 ? 0.5 : -0.5);
  const auto interval = alpha_search_interval(n);
  r.diagnostics.alpha_in_search_interval = recipe.alpha >= interval.lo && recipe.alpha <= interval.hi;
  return r;
}

ConstructionResult construct_mn_prime(int n) {
  require_even(n, 8, "Mossinghoff-prime polygon");
  return from_thin(Family::MossinghoffPrime, thin_params(n, mossinghoff_alpha(n)));
}

ConstructionResult construct(Family family, int n) {
  switch (family) {
    case Family::Regular: return construct_regular(n);
    case Family::RegularPlus: return construct_regular_plus(n);
    case Family::Mossinghoff: return construct_mn(n);
    case Family::MossinghoffPrime: return construct_mn_prime(n);
    case Family::Bn: return construct_bn(n);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace smallgon
