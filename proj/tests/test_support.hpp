#pragma once

#include <cmath>
#include <random>

#include "smallgon/thin_model.hpp"

namespace smallgon::testing {

/// Uniform draw from the alpha search interval of the thin model.
inline double random_thin_alpha(int n, std::mt19937& rng) {
  const auto interval = alpha_search_interval(n);
  std::uniform_real_distribution<double> dist(interval.lo, interval.hi);
  return dist(rng);
}

/// |actual - expected| <= tol, for use inside CHECK.
inline bool near(double actual, double expected, double tol) { return std::abs(actual - expected) <= tol; }

}  // namespace smallgon::testing
