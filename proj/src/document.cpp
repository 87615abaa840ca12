#include "smallgon/document.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "smallgon/errors.hpp"

namespace smallgon {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kSvgScale = 400.0;
constexpr double kSvgMargin = 20.0;

std::string optional_field(const std::optional<double>& v) {
  return v ? format_fixed(*v, kExportDecimals) : std::string();
}

std::optional<double> optional_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number()) throw DocumentError(std::string("field '") + key + "' is not a number");
  return j.at(key).get<double>();
}

// Boundary cycle for drawing; falls back to index order when the vertices
// are not in convex position about (0, 1/2).
std::vector<int> drawing_order(const Polygon& poly) {
  try {
    return boundary_order(poly);
  } catch (const NotConvexPosition&) {
    std::vector<int> order(static_cast<std::size_t>(poly.size()));
    for (int i = 0; i < poly.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    return order;
  }
}

std::vector<std::pair<int, int>> unit_edges(const Polygon& poly, double tol) {
  try {
    return diameter_graph(poly, tol).edges;
  } catch (const NotSmall&) {
    return {};
  }
}

std::string tikz_point(Point p) {
  return "(" + format_fixed(p.x, 4) + "," + format_fixed(p.y, 4) + ")";
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string out(buf);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

double round_for_export(double value) {
  return std::strtod(format_fixed(value, kExportDecimals).c_str(), nullptr);
}

PolygonDocument make_document(const ConstructionResult& result) {
  PolygonDocument doc;
  doc.family = std::string(family_name(result.family));
  doc.n = result.n;
  if (result.params) {
    doc.alpha = result.params->alpha;
    doc.beta = result.params->beta;
    doc.gamma = result.params->gamma;
  }
  doc.vertices = result.polygon.vertices;
  doc.area = result.area;
  doc.diameter = diameter(result.polygon).length;
  for (const auto& check : run_checks(doc)) doc.checks[check.name] = check.passed;
  return doc;
}

std::vector<CheckOutcome> run_checks(const PolygonDocument& doc, double tol) {
  const Polygon poly = doc.polygon();
  std::vector<CheckOutcome> out;

  const double d = diameter(poly).length;
  out.push_back({"small", std::abs(d - 1.0) <= tol, true, "diameter " + format_fixed(d, kExportDecimals)});
  out.push_back({"convex", is_convex(poly), true, ""});
  out.push_back({"symmetric", is_mirror_symmetric(poly, tol), true, "reflection across x = 0"});

  CheckOutcome graph{"diameter_graph_optimal", false, doc.family != "regular", ""};
  try {
    const DiameterGraph g = diameter_graph(poly, tol);
    graph.passed = g.cycle_plus_pendant;
    graph.detail = std::to_string(g.edges.size()) + " unit-distance pairs";
  } catch (const NotSmall& e) {
    graph.detail = e.what();
  }
  if (!graph.required) graph.detail += " (not required for family regular)";
  out.push_back(std::move(graph));

  CheckOutcome area{"area_consistent", false, true, ""};
  try {
    const double computed = shoelace_area(poly);
    area.passed = std::abs(computed - doc.area) <= tol;
    area.detail = "shoelace " + format_fixed(computed, kExportDecimals);
  } catch (const NotConvexPosition& e) {
    area.detail = e.what();
  }
  out.push_back(std::move(area));
  return out;
}

std::string to_json(const PolygonDocument& doc) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["family"] = doc.family;
  j["n"] = doc.n;
  if (doc.alpha) j["alpha"] = round_for_export(*doc.alpha);
  if (doc.beta) j["beta"] = round_for_export(*doc.beta);
  if (doc.gamma) j["gamma"] = round_for_export(*doc.gamma);
  ordered_json vertices = ordered_json::array();
  for (const Point& p : doc.vertices) vertices.push_back({round_for_export(p.x), round_for_export(p.y)});
  j["vertices"] = std::move(vertices);
  j["area"] = round_for_export(doc.area);
  j["diameter"] = round_for_export(doc.diameter);
  ordered_json checks = ordered_json::object();
  for (const auto& [name, passed] : doc.checks) checks[name] = passed;
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

PolygonDocument document_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document root must be an object");

  PolygonDocument doc;
  try {
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kSchemaVersion) {
      throw DocumentError("unsupported schema_version " + std::to_string(doc.schema_version));
    }
    doc.family = j.value("family", std::string());
    doc.n = j.at("n").get<int>();
    doc.alpha = optional_number(j, "alpha");
    doc.beta = optional_number(j, "beta");
    doc.gamma = optional_number(j, "gamma");
    for (const auto& v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw DocumentError("each vertex must be an [x, y] pair of numbers");
      }
      doc.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    doc.area = j.at("area").get<double>();
    doc.diameter = j.value("diameter", 0.0);
    if (j.contains("checks")) {
      for (const auto& [name, value] : j.at("checks").items()) doc.checks[name] = value.get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("malformed polygon document: ") + e.what());
  }
  if (doc.n < 3 || static_cast<int>(doc.vertices.size()) != doc.n) {
    throw DocumentError("document declares n = " + std::to_string(doc.n) + " but lists " +
                        std::to_string(doc.vertices.size()) + " vertices");
  }
  return doc;
}

std::string to_csv(const PolygonDocument& doc) {
  std::ostringstream out;
  out << "family,n,alpha,beta,gamma,area,diameter,index,x,y\n";
  const std::string prefix = doc.family + "," + std::to_string(doc.n) + "," + optional_field(doc.alpha) + "," +
                             optional_field(doc.beta) + "," + optional_field(doc.gamma) + "," +
                             format_fixed(doc.area, kExportDecimals) + "," +
                             format_fixed(doc.diameter, kExportDecimals) + ",";
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    out << prefix << i << "," << format_fixed(doc.vertices[i].x, kExportDecimals) << ","
        << format_fixed(doc.vertices[i].y, kExportDecimals) << "\n";
  }
  return out.str();
}

std::string to_svg(const PolygonDocument& doc, double tol) {
  const Polygon poly = doc.polygon();
  const double size = kSvgScale + 2 * kSvgMargin;
  const auto sx = [&](double x) { return format_fixed(kSvgMargin + kSvgScale * (x + 0.5), 3); };
  const auto sy = [&](double y) { return format_fixed(kSvgMargin + kSvgScale * (1.0 - y), 3); };
  const auto line = [&](Point a, Point b, const char* cls) {
    return std::string("  <line class=\"") + cls + "\" x1=\"" + sx(a.x) + "\" y1=\"" + sy(a.y) + "\" x2=\"" +
           sx(b.x) + "\" y2=\"" + sy(b.y) + "\"/>\n";
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_fixed(size, 0)
      << "\" height=\"" << format_fixed(size, 0) << "\" viewBox=\"0 0 " << format_fixed(size, 0) << " "
      << format_fixed(size, 0) << "\">\n"
      << "  <title>" << doc.family << " n=" << doc.n << " area=" << format_fixed(doc.area, 6) << "</title>\n"
      << "  <style>line { stroke: black; stroke-width: 1.5; } line.boundary { stroke-dasharray: 6 4; }</style>\n";
  const auto order = drawing_order(poly);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out << line(poly[order[i]], poly[order[(i + 1) % order.size()]], "boundary");
  }
  for (auto [i, j] : unit_edges(poly, tol)) out << line(poly[i], poly[j], "diameter");
  out << "</svg>\n";
  return out.str();
}

std::string to_tikz(const PolygonDocument& doc, double tol) {
  const Polygon poly = doc.polygon();
  std::ostringstream out;
  out << "% " << doc.family << " n=" << doc.n << " area=" << format_fixed(doc.area, 6) << "\n";
  out << "\\begin{tikzpicture}[scale=4]\n\t\\draw[dashed] ";
  for (int idx : drawing_order(poly)) out << tikz_point(poly[idx]) << " -- ";
  out << "cycle;\n";
  for (auto [i, j] : unit_edges(poly, tol)) {
    out << "\t\\draw " << tikz_point(poly[i]) << " -- " << tikz_point(poly[j]) << ";\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace smallgon
