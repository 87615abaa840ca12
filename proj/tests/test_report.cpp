#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "smallgon/asymptotics.hpp"
#include "smallgon/constructions.hpp"
#include "smallgon/report.hpp"
#include "table1_data.hpp"
#include "test_support.hpp"

using namespace smallgon;
using smallgon::testing::kPublishedTable;
using smallgon::testing::kTableTol;
using smallgon::testing::near;
using smallgon::testing::published_row;

namespace {

constexpr double kPi = std::numbers::pi;

double relative(double value, double limit) { return std::abs(value - limit) / std::abs(limit); }

}  // namespace

TEST_CASE("asymptotic constants match their printed decimals") {
  const auto& k = asymptotic_constants();
  CHECK(near(k.a, 0.652461, 1e-6));
  CHECK(near(k.b, 0.389733, 1e-6));
  CHECK(near(k.c, 1.631188, 1e-6));
  CHECK(near(k.t_mod2, 0.429901, 1e-6));
  CHECK(near(k.t_mod0, 0.589862, 1e-6));
  CHECK(near(k.d_mod2, 0.0836582354, 1e-10));
  CHECK(near(k.d_mod0, 0.1180393778, 1e-10));
  CHECK(k.t(8) == k.t_mod0);
  CHECK(k.t(10) == k.t_mod2);
  CHECK(k.d(100) == k.d_mod0);
  CHECK(k.d(102) == k.d_mod2);
}

TEST_CASE("t written through a agrees with its radical form") {
  const auto& k = asymptotic_constants();
  const double a = k.a;
  const double even = 4 * (7 * a * a - 32 * a + 25) / (44 * a + 27);
  const double alt = 15 * kPi * (8 * a * a * a + 12 * a * a - 2 * a - 3) / (32 * (44 * a + 27));
  CHECK(near(k.t_mod0, even + alt, 1e-14));
  CHECK(near(k.t_mod2, even - alt, 1e-14));
  CHECK(near(a, (2 * std::sqrt(114.0) - 7) / 22, 1e-16));
  CHECK(near(44 * a * a + 28 * a - 37, 0.0, 1e-13));
}

TEST_CASE("bound gap limit") {
  CHECK(near(kBoundGapLimit, bound_gap_limit_from_radicals(), 1e-14));
  CHECK(kBoundGapLimit < 3 * kPi * kPi * kPi / 40);
  CHECK(near(penalty_coefficient(), kPi * kPi * kPi * std::sqrt(114.0) / 8, 1e-13));
}

TEST_CASE("table rows") {
  const auto r16 = gap_report(16);
  const auto& p16 = published_row(16);
  CHECK(near(r16.alpha_hat, p16.alpha_hat, kTableTol));
  CHECK(near(r16.area_regular, p16.regular, kTableTol));
  CHECK(near(r16.area_regular_plus, p16.regular_plus, kTableTol));
  CHECK(near(r16.area_mn, p16.mossinghoff, kTableTol));
  CHECK(near(r16.area_mn_prime, p16.mossinghoff_prime, kTableTol));
  CHECK(near(r16.area_bn, p16.bn, kTableTol));
  CHECK(near(r16.upper_bound, p16.upper_bound, kTableTol));
  CHECK(near(gap_report(20).area_bn, 0.7768543958, kTableTol));
  const auto r6 = gap_report(6);
  CHECK(r6.area_mn == r6.area_mn_prime);
  CHECK(near(r6.area_mn, 0.6731855653, kTableTol));
}

TEST_CASE("table is ordered by n and matches every published value") {
  const auto rows = table1(24);
  REQUIRE(rows.size() == kPublishedTable.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto& p = kPublishedTable[i];
    CAPTURE(p.n);
    CHECK(row.n == p.n);
    CHECK(near(row.alpha_hat, p.alpha_hat, kTableTol));
    CHECK(near(row.area_regular, p.regular, kTableTol));
    CHECK(near(row.area_regular_plus, p.regular_plus, kTableTol));
    CHECK(near(row.area_mn, p.mossinghoff, kTableTol));
    CHECK(near(row.area_mn_prime, p.mossinghoff_prime, kTableTol));
    CHECK(near(row.area_bn, p.bn, kTableTol));
    CHECK(near(row.upper_bound, p.upper_bound, kTableTol));
  }
  CHECK(table1(6).size() == 1);
  CHECK(table1(48).size() == 22);
  CHECK_THROWS_AS(table1(4), std::invalid_argument);
}

TEST_CASE("gap to the bound decreases monotonically") {
  double previous = 1.0;
  for (int n = 6; n <= 24; n += 2) {
    const double gap = upper_bound(n) - construct_bn(n).area;
    CHECK(gap > 0.0);
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("alpha series") {
  CHECK(near(alpha_hat_series(6), 0.3519141412, 1e-10));
  CHECK(std::abs(alpha_hat_series(6) - published_row(6).alpha_hat) < 4e-3);
  CHECK(std::abs(alpha_hat_series(24) - published_row(24).alpha_hat) < 1e-5);
  CHECK(near(1e6 * alpha_hat_series(1000000) / kPi, asymptotic_constants().a, 1e-6));

  // The remainder scales like 1/n^4 with a coefficient that settles near -0.7.
  double previous = 0.0;
  for (int n : {24, 48, 96}) {
    const double scaled = std::pow(n, 4) * (*construct_bn(n).alpha_star - alpha_hat_series(n)) / kPi;
    CAPTURE(n);
    CHECK(scaled < -0.6);
    CHECK(scaled > -0.75);
    if (previous != 0.0) CHECK(scaled < previous);
    previous = scaled;
  }
}

TEST_CASE("scaled gap to the bound") {
  CHECK(relative(gap_vs_bound(512), kBoundGapLimit) < 1e-2);
  CHECK(relative(gap_vs_bound(256), kBoundGapLimit) > relative(gap_vs_bound(512), kBoundGapLimit));
}

TEST_CASE("scaled gap to Mossinghoff") {
  const auto& k = asymptotic_constants();
  CHECK(relative(gap_vs_mossinghoff(100), k.d_mod0) < 0.1);
  CHECK(relative(gap_vs_mossinghoff(102), k.d_mod2) < 0.1);
  CHECK(near(gap_report(100).scaled_gap_mn, gap_vs_mossinghoff(100), 1e-12));
}

TEST_CASE("perturbation penalty") {
  const auto& k = asymptotic_constants();
  const double coefficient = penalty_coefficient();
  CHECK(relative(perturbation_penalty(200, k.b + 1), coefficient) < 0.15);
  for (int n : {100, 200}) {
    CAPTURE(n);
    const double plus = perturbation_penalty(n, k.b + 1);
    const double minus = perturbation_penalty(n, k.b - 1);
    CHECK(std::abs(perturbation_penalty(n, k.b)) < 0.02 * coefficient);
    CHECK(relative(plus, minus) < 0.1);
  }
  CHECK(relative(perturbation_penalty(200, k.b + 1), perturbation_penalty(200, k.b - 1)) <
        relative(perturbation_penalty(100, k.b + 1), perturbation_penalty(100, k.b - 1)));
}

TEST_CASE("secondary series at n = 1024") {
  const int n = 1024;
  const double nn = n;
  CHECK(relative(nn * nn * (upper_bound(n) - area_regular(n)), regular_gap_limit()) < 0.05);
  CHECK(relative(nn * nn * nn * (upper_bound(n) - area_regular_plus(n)), regular_plus_gap_limit()) < 0.05);
}
