#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smallgon/constructions.hpp"
#include "smallgon/geometry.hpp"

namespace smallgon {

inline constexpr int kSchemaVersion = 1;
/// Decimals written for every numeric field in JSON and CSV.
inline constexpr int kExportDecimals = 12;

/// Interchange form of a polygon. Vertices are listed v_0 ... v_{n-1}.
struct PolygonDocument {
  int schema_version = kSchemaVersion;
  std::string family;
  int n = 0;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::vector<Point> vertices;
  double area = 0.0;
  double diameter = 0.0;
  std::map<std::string, bool> checks;

  Polygon polygon() const { return Polygon{vertices}; }
};

/// Rounds to `decimals` places (round-half-even on exact ties) and prints in
/// fixed notation; negative zero prints as zero.
std::string format_fixed(double value, int decimals);

/// Value as it appears in an export with kExportDecimals places.
double round_for_export(double value);

PolygonDocument make_document(const ConstructionResult& result);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  /// Failing a non-required check does not fail verification.
  bool required = true;
  std::string detail;
};

/// small, convex, symmetric, diameter_graph_optimal and area_consistent.
/// The diameter-graph structure is not required of the regular family.
std::vector<CheckOutcome> run_checks(const PolygonDocument& doc, double tol = kVerifyTol);

std::string to_json(const PolygonDocument& doc);

/// Throws DocumentError on malformed input.
PolygonDocument document_from_json(std::string_view text);

/// One row per vertex; document fields repeat on every row.
std::string to_csv(const PolygonDocument& doc);

/// Dashed boundary segments and solid unit-distance edges.
std::string to_svg(const PolygonDocument& doc, double tol = kVerifyTol);

/// tikzpicture fragment at scale=4 with 4-decimal coordinates.
std::string to_tikz(const PolygonDocument& doc, double tol = kVerifyTol);

}  // namespace smallgon
