#include "smallgon/report.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

#include "smallgon/constructions.hpp"
#include "smallgon/thin_model.hpp"

namespace smallgon {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double alpha_hat_series(int n) {
  if (n < 6) throw std::invalid_argument("alpha series needs n >= 6");
  const auto& k = asymptotic_constants();
  const double nn = n;
  return k.a * kPi / nn + k.b * kPi / (nn * nn) - k.c * kPi / (nn * nn * nn);
}

GapReport gap_report(int n) {
  GapReport row;
  row.n = n;
  const ConstructionResult bn = construct_bn(n);
  row.alpha_hat = *bn.alpha_star;
  row.area_bn = bn.area;
  row.area_regular = area_regular(n);
  row.area_regular_plus = area_regular_plus(n);
  row.area_mn = construct_mn(n).area;
  row.area_mn_prime = n >= 8 ? construct_mn_prime(n).area : row.area_mn;
  row.upper_bound = upper_bound(n);

  const double nn = n;
  row.scaled_gap_ub = nn * nn * nn * (row.upper_bound - row.area_bn);
  row.scaled_gap_mn = std::pow(nn, 5) * (row.area_bn - row.area_mn) / (3 * kPi * kPi * kPi);
  return row;
}

std::vector<GapReport> table1(int n_max) {
  if (n_max < 6) throw std::invalid_argument("table needs n_max >= 6");
  std::vector<std::future<GapReport>> pending;
  for (int n = 6; n <= n_max; n += 2) pending.push_back(std::async(std::launch::async, gap_report, n));
  std::vector<GapReport> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

double gap_vs_bound(int n) {
  const double nn = n;
  return nn * nn * nn * (upper_bound(n) - construct_bn(n).area);
}

double gap_vs_mossinghoff(int n) {
  return std::pow(static_cast<double>(n), 5) * (construct_bn(n).area - construct_mn(n).area) / (3 * kPi * kPi * kPi);
}

double perturbation_penalty(int n, double u) {
  const auto& k = asymptotic_constants();
  const double nn = n;
  const double alpha = k.a * kPi / nn + u * kPi / (nn * nn);
  return std::pow(nn, 5) * (construct_bn(n).area - thin_objective(n, alpha));
}

}  // namespace smallgon
