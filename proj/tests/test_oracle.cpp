#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "smallgon/constructions.hpp"
#include "smallgon/geometry.hpp"
#include "smallgon/oracle.hpp"
#include "smallgon/thin_model.hpp"
#include "table1_data.hpp"
#include "test_support.hpp"

using namespace smallgon;
using smallgon::testing::kTableTol;
using smallgon::testing::near;
using smallgon::testing::random_thin_alpha;

namespace {

std::vector<double> head_of(const std::vector<double>& angles) {
  return {angles.begin(), angles.end() - 2};
}

}  // namespace

TEST_CASE("known optima") {
  const auto& table = known_optima();
  CHECK(table.size() == 4);
  double previous = 0.0;
  for (const auto& [n, area] : table) {
    CHECK(area > previous);
    CHECK(area < upper_bound(n));
    previous = area;
  }
}

TEST_CASE("fan area agrees with the shoelace area") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + 2 * (trial % 10);
    const AngleSequence seq = thin_angles(thin_params(n, random_thin_alpha(n, rng)));
    CHECK(std::abs(fan_area(seq.angles()) - shoelace_area(vertices_from_angles(seq))) < 1e-13);
  }
}

TEST_CASE("full area at the B_n angles") {
  for (int n : {6, 8, 10, 12, 20}) {
    CAPTURE(n);
    const auto b = construct_bn(n);
    CHECK(std::abs(full_area(n, head_of(b.angles)) - thin_area(*b.params)) < 1e-10);
  }
  CHECK(near(full_area(6, std::vector<double>{0.3509301889}), 0.6749814429, kTableTol));
  CHECK(near(full_area(8, head_of(construct_bn(8).angles)), 0.7268542719, kTableTol));
}

TEST_CASE("full area sentinel") {
  const double neg_inf = -std::numeric_limits<double>::infinity();
  CHECK(full_area(8, std::vector<double>{1.0, 0.8}) == neg_inf);
  CHECK(full_area(8, std::vector<double>{-0.1, 0.5}) == neg_inf);
  CHECK(full_area(6, std::vector<double>{std::numbers::pi / 2 - 1e-9}) == neg_inf);
  CHECK_THROWS_AS(full_area(8, std::vector<double>{0.3}), std::invalid_argument);
  CHECK_THROWS_AS(full_area(7, std::vector<double>{0.3}), std::invalid_argument);
}

TEST_CASE("oracle reproduces the known optima") {
  for (const auto& [n, known] : known_optima()) {
    CAPTURE(n);
    const OracleResult r = solve_optimal(n);
    const double b = construct_bn(n).area;
    CHECK(r.converged);
    CHECK(r.angles.size() == static_cast<std::size_t>(n / 2));
    CHECK(std::abs(r.area - known) < (n == 6 ? 1e-5 : 1e-4));
    CHECK(r.area >= b - 1e-9);
    CHECK(r.area < upper_bound(n));
    if (n == 6) CHECK(r.area <= b + 1e-6);
    const Polygon p = vertices_from_angles(AngleSequence(r.angles));
    CHECK(near(shoelace_area(p), r.area, 1e-12));
    CHECK(diameter(p).length <= 1.0 + kVerifyTol);
  }
  CHECK_THROWS_AS(solve_optimal(14), std::invalid_argument);
}
