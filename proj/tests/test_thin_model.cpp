#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "smallgon/constructions.hpp"
#include "smallgon/errors.hpp"
#include "smallgon/geometry.hpp"
#include "smallgon/thin_model.hpp"
#include "table1_data.hpp"
#include "test_support.hpp"

using namespace smallgon;
using smallgon::testing::near;
using smallgon::testing::published_row;
using smallgon::testing::random_thin_alpha;

namespace {

constexpr double kPi = std::numbers::pi;

// Mossinghoff's t written through a, not through the radicals used by the library.
double t_via_a(int n) {
  const double a = (2 * std::sqrt(114.0) - 7) / 22;
  const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  return 4 * (7 * a * a - 32 * a + 25) / (44 * a + 27) +
         sign * 15 * kPi * (8 * a * a * a + 12 * a * a - 2 * a - 3) / (32 * (44 * a + 27));
}

}  // namespace

TEST_CASE("beta from alpha") {
  for (int n = 6; n <= 24; n += 2) {
    CHECK(near(beta_from_alpha(n, kPi / (2 * n - 2)), kPi / (n - 1), 1e-15));
    CHECK(beta_from_alpha(n, kPi / 2) == 0.0);
  }
  CHECK(near(beta_from_alpha(6, 0.3509301889), (kPi / 2 - 0.3509301889) / 2, 1e-16));
  CHECK(near(beta_from_alpha(6, 0.3509301889), 0.6099330689, 5e-11));
  CHECK_THROWS_AS(beta_from_alpha(7, 0.3), std::invalid_argument);
}

TEST_CASE("gamma from alpha and beta") {
  for (int n = 6; n <= 24; n += 2) {
    CHECK(std::abs(gamma_from_alpha_beta(kPi / (2 * n - 2), kPi / (n - 1))) < 1e-14);
  }

  const ThinParams b8 = thin_params(8, published_row(8).alpha_hat);
  const Polygon p = thin_polygon(b8);
  CHECK(near(p[2].x, -0.4068, 5e-5));
  CHECK(near(p[2].y, 0.2215, 5e-5));

  CHECK_THROWS_AS(gamma_from_alpha_beta(kPi / 2 - 1e-3, 1e-4), InfeasibleAlpha);
}

TEST_CASE("constraint residuals after solving") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 6 + 2 * (trial % 20);
    const ThinParams p = thin_params(n, random_thin_alpha(n, rng));
    CHECK(std::abs(angle_sum_residual(p)) < 1e-12);
    CHECK(std::abs(closure_residual(p)) < 1e-14);
    CHECK(std::abs(p.gamma) < p.beta);
  }
}

TEST_CASE("closure: the middle edge is horizontal with length one") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 6 + 2 * (trial % 20);
    const Polygon poly = thin_polygon(thin_params(n, random_thin_alpha(n, rng)));
    const double expected = (n / 2) % 2 == 0 ? 0.5 : -0.5;
    CHECK(std::abs(poly[n / 2 - 1].x - expected) < 1e-12);
  }
}

TEST_CASE("thin area reproduces published values") {
  CHECK(near(thin_area(thin_params(6, published_row(6).alpha_hat)), 0.6749814429, 5e-11));
  CHECK(near(thin_area(thin_params(8, kPi / 14)), 0.7253199909, 5e-11));
  CHECK(near(thin_objective(6, 0.3509301889), 0.6749814429, 5e-11));

  const int n = 8;
  const double a = (2 * std::sqrt(114.0) - 7) / 22;
  CHECK(near(thin_objective(n, a * kPi / n + t_via_a(n) * kPi / (n * n)), 0.7264449921, 5e-11));
}

TEST_CASE("thin area agrees with the shoelace area of the built polygon") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 6 + 2 * (trial % 10);
    const ThinParams p = thin_params(n, random_thin_alpha(n, rng));
    CHECK(std::abs(thin_area(p) - shoelace_area(thin_polygon(p))) < 1e-12);
  }
}

TEST_CASE("the general tail terms vanish at n = 6 under closure") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const ThinParams p = thin_params(6, random_thin_alpha(6, rng));
    const double group = (std::cos(p.beta - p.gamma) - std::cos(2 * p.beta) - 0.5) * std::tan(p.beta / 2);
    CHECK(std::abs(group) < 1e-15);
  }
}

TEST_CASE("endpoint of the search interval is the regular polygon plus one") {
  for (int n = 6; n <= 24; n += 2) {
    const double f_lo = thin_objective(n, kPi / (2 * n - 2));
    CHECK(std::abs(f_lo - area_regular_plus(n)) < 1e-13);
    CHECK(near(f_lo, published_row(n).regular_plus, 1e-10));
  }
}

TEST_CASE("triangle areas") {
  SUBCASE("first triangle of B_6") {
    const auto t = triangle_areas(thin_params(6, 0.3509301889));
    REQUIRE(t.values.size() == 2);
    CHECK(near(2 * t.values[0], std::sin(0.3509301889), 1e-16));
    CHECK(near(2 * t.values[0], 0.3438, 5e-5));
  }
  SUBCASE("second triangle with gamma = 0 and alpha = beta") {
    const double beta = 0.3;
    const auto t = triangle_areas(ThinParams{8, beta, beta, 0.0});
    CHECK(near(2 * t.values[1], std::sin(2 * beta) - std::sin(beta), 1e-16));
  }
  SUBCASE("B_10 triangles sum to the published area") {
    const ThinParams p = thin_params(10, published_row(10).alpha_hat);
    const auto t = triangle_areas(p);
    CHECK(t.values.size() == 4);
    CHECK(near(t.polygon_area(), 0.7491189262, 5e-10));
  }
  SUBCASE("specialized formulas match cross products of the vertices") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 6 + 2 * (trial % 12);
      const ThinParams p = thin_params(n, random_thin_alpha(n, rng));
      const Polygon poly = thin_polygon(p);
      const auto t = triangle_areas(p);
      const int m = n / 2;
      // v_m mirrors v_{m-1}
      const auto vertex = [&](int k) { return k == m ? Point{-poly[m - 1].x, poly[m - 1].y} : poly[k]; };
      CHECK(near(2 * t.values[0], poly[1].x, 1e-14));
      for (int k = 2; k <= m - 1; ++k) {
        const Point next = vertex(k + 1);
        const Point prev = vertex(k - 1);
        CHECK(near(2 * t.values[static_cast<std::size_t>(k - 1)], next.x * prev.y - next.y * prev.x, 1e-13));
      }
      CHECK(std::abs(t.polygon_area() - thin_area(p)) < 1e-13);
      for (double v : t.values) CHECK(v > 0.0);
    }
  }
}
