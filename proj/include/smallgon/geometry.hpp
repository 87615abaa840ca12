#pragma once

#include <span>
#include <utility>
#include <vector>

namespace smallgon {

/// Equality tolerance for quantities that hold by construction.
inline constexpr double kGeometryTol = 1e-12;
/// Default tolerance for user-facing verification of exported polygons.
inline constexpr double kVerifyTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

/// Turning angles alpha_0 ... alpha_{n/2-1} of a polygon that is symmetric
/// about the vertical segment v_0 = (0,0), v_{n-1} = (0,1).
///
/// Construction enforces n/2 >= 3 angles, each in (0, pi/2), summing to pi/2.
class AngleSequence {
 public:
  explicit AngleSequence(std::vector<double> angles);

  int vertex_count() const { return static_cast<int>(2 * angles_.size()); }
  std::span<const double> angles() const { return angles_; }

 private:
  std::vector<double> angles_;
};

/// Vertices v_0 ... v_{n-1}. For polygons built here v_0 is the origin,
/// v_{n-1} = (0,1), and v_k mirrors v_{n-k-1} across x = 0.
struct Polygon {
  std::vector<Point> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  const Point& operator[](int i) const { return vertices[static_cast<std::size_t>(i)]; }
};

struct DiameterResult {
  double length = 0.0;
  std::pair<int, int> pair{0, 0};
};

/// Pairs of vertices at unit distance.
struct DiameterGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  /// True when the edges form a cycle through n-1 vertices plus one pendant
  /// edge to the remaining vertex.
  bool cycle_plus_pendant = false;
};

/// Builds all n vertices: the right-hand zigzag from alternating partial
/// sums of unit steps, then its mirror image, then the apex (0,1).
Polygon vertices_from_angles(const AngleSequence& seq);

/// Indices sorted counterclockwise by polar angle about (0, 1/2), starting
/// at v_0. Throws NotConvexPosition unless the resulting cycle is convex.
std::vector<int> boundary_order(const Polygon& poly);

/// Boundary cycle of the thin polygons produced by vertices_from_angles:
/// 0, n-3, n-5, ..., 1, n-1, n-2, n-4, ..., 2.
std::vector<int> thin_boundary_cycle(int n);

double shoelace_area(const Polygon& poly);

/// O(n^2) scan over all vertex pairs.
DiameterResult diameter(const Polygon& poly);

/// Throws NotSmall if some pair is farther apart than 1 + tol.
DiameterGraph diameter_graph(const Polygon& poly, double tol = kVerifyTol);

/// Cross products of consecutive boundary edges all non-negative; values
/// above -1e-12 count as straight angles.
bool is_convex(const Polygon& poly);

/// Reflection across x = 0 maps the vertex set onto itself within tol.
bool is_mirror_symmetric(const Polygon& poly, double tol = kVerifyTol);

}  // namespace smallgon
