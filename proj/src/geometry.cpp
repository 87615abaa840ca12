#include "smallgon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <string>

#include "smallgon/errors.hpp"

namespace smallgon {

namespace {

constexpr Point kPolarCenter{0.0, 0.5};

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Sorted by polar angle about (0, 1/2), measured counterclockwise from the
// downward direction so that the origin comes first.
std::vector<int> polar_order(const Polygon& poly) {
  const int n = poly.size();
  std::vector<double> key(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = std::atan2(poly[i].y - kPolarCenter.y, poly[i].x - kPolarCenter.x);
    double phi = std::fmod(theta + std::numbers::pi / 2 + 2 * std::numbers::pi, 2 * std::numbers::pi);
    // atan2 of (-0, -0.5) style inputs can land just below 2 pi
    if (phi > 2 * std::numbers::pi - 1e-15) phi = 0.0;
    key[static_cast<std::size_t>(i)] = phi;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
  });
  auto first = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), first, order.end());
  return order;
}

bool convex_cycle(const Polygon& poly, const std::vector<int>& order) {
  const std::size_t n = order.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = poly[order[(i + n - 1) % n]];
    const Point cur = poly[order[i]];
    const Point next = poly[order[(i + 1) % n]];
    if (cross(prev, cur, next) < -kGeometryTol) return false;
  }
  return true;
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

AngleSequence::AngleSequence(std::vector<double> angles) : angles_(std::move(angles)) {
  if (angles_.size() < 3) {
    throw MalformedSequence("angle sequence needs at least 3 angles (n >= 6), got " +
                            std::to_string(angles_.size()));
  }
  double sum = 0.0;
  for (double a : angles_) {
    if (!(a > 0.0 && a < std::numbers::pi / 2)) {
      throw MalformedSequence("angle " + std::to_string(a) + " outside (0, pi/2)");
    }
    sum += a;
  }
  if (std::abs(sum - std::numbers::pi / 2) > kGeometryTol) {
    throw MalformedSequence("angles sum to " + std::to_string(sum) + ", expected pi/2");
  }
}

Polygon vertices_from_angles(const AngleSequence& seq) {
  const auto angles = seq.angles();
  const int n = seq.vertex_count();
  const int half = n / 2;

  Polygon poly;
  poly.vertices.resize(static_cast<std::size_t>(n));
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  for (int k = 1; k < half; ++k) {
    heading += angles[static_cast<std::size_t>(k - 1)];
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    x += sign * std::sin(heading);
    y += sign * std::cos(heading);
    poly.vertices[static_cast<std::size_t>(k)] = {x, y};
    poly.vertices[static_cast<std::size_t>(n - k - 1)] = {-x, y};
  }
  poly.vertices[static_cast<std::size_t>(n - 1)] = {0.0, 1.0};
  return poly;
}

std::vector<int> boundary_order(const Polygon& poly) {
  auto order = polar_order(poly);
  if (!convex_cycle(poly, order)) {
    throw NotConvexPosition("vertices are not in convex position about (0, 1/2)");
  }
  return order;
}

std::vector<int> thin_boundary_cycle(int n) {
  std::vector<int> cycle;
  cycle.reserve(static_cast<std::size_t>(n));
  cycle.push_back(0);
  for (int k = n - 3; k >= 1; k -= 2) cycle.push_back(k);
  cycle.push_back(n - 1);
  for (int k = n - 2; k >= 2; k -= 2) cycle.push_back(k);
  return cycle;
}

double shoelace_area(const Polygon& poly) {
  const auto order = boundary_order(poly);
  const std::size_t n = order.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = poly[order[i]];
    const Point q = poly[order[(i + 1) % n]];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2;
}

DiameterResult diameter(const Polygon& poly) {
  DiameterResult best;
  for (int i = 0; i < poly.size(); ++i) {
    for (int j = i + 1; j < poly.size(); ++j) {
      const double d = distance(poly[i], poly[j]);
      if (d > best.length) best = {d, {i, j}};
    }
  }
  return best;
}

DiameterGraph diameter_graph(const Polygon& poly, double tol) {
  const int n = poly.size();
  DiameterGraph graph;
  graph.vertex_count = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(poly[i], poly[j]);
      if (d > 1.0 + tol) {
        throw NotSmall("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                       " are " + std::to_string(d) + " apart");
      }
      if (std::abs(d - 1.0) <= tol) graph.edges.emplace_back(i, j);
    }
  }

  if (n < 4 || static_cast<int>(graph.edges.size()) != n) return graph;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [i, j] : graph.edges) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  int pendant = -1;
  for (int v = 0; v < n; ++v) {
    if (adj[static_cast<std::size_t>(v)].size() == 1) {
      if (pendant >= 0) return graph;
      pendant = v;
    }
  }
  if (pendant < 0) return graph;
  const int hub = adj[static_cast<std::size_t>(pendant)].front();

  // Without the pendant vertex every vertex must have degree 2, and the
  // remaining n-1 vertices must be connected: a single (n-1)-cycle.
  for (int v = 0; v < n; ++v) {
    if (v == pendant) continue;
    const std::size_t degree = adj[static_cast<std::size_t>(v)].size() - (v == hub ? 1 : 0);
    if (degree != 2) return graph;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> frontier;
  frontier.push(hub);
  seen[static_cast<std::size_t>(hub)] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w == pendant || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++reached;
      frontier.push(w);
    }
  }
  graph.cycle_plus_pendant = (reached == n - 1);
  return graph;
}

bool is_convex(const Polygon& poly) { return convex_cycle(poly, polar_order(poly)); }

bool is_mirror_symmetric(const Polygon& poly, double tol) {
  for (const Point& p : poly.vertices) {
    const bool matched = std::any_of(poly.vertices.begin(), poly.vertices.end(), [&](const Point& q) {
      return std::abs(q.x + p.x) <= tol && std::abs(q.y - p.y) <= tol;
    });
    if (!matched) return false;
  }
  return true;
}

}  // namespace smallgon
