#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "smallgon/asymptotics.hpp"
#include "smallgon/constructions.hpp"
#include "smallgon/document.hpp"
#include "smallgon/errors.hpp"
#include "smallgon/report.hpp"

namespace smallgon::cli {

namespace {

struct ConstructArgs {
  std::string family;
  int n = 0;
  std::string format = "json";
  std::string out_path;
};

struct TableArgs {
  int n_max = 24;
  std::string format = "markdown";
};

struct VerifyArgs {
  std::string file;
  double tol = kVerifyTol;
};

struct AsymptoticsArgs {
  int n = 0;
  std::string series = "ub-gap";
  std::optional<double> u;
};

std::string solver_stage(const Error& e) {
  if (dynamic_cast<const MaximizerFailed*>(&e)) return "scalar maximizer";
  if (dynamic_cast<const NewtonFailed*>(&e)) return "tail closure (Newton)";
  if (dynamic_cast<const InfeasibleAlpha*>(&e)) return "gamma solve";
  return "geometry";
}

std::string render(const PolygonDocument& doc, const std::string& format) {
  if (format == "csv") return to_csv(doc);
  if (format == "svg") return to_svg(doc);
  if (format == "tikz") return to_tikz(doc);
  return to_json(doc);
}

int cmd_construct(const ConstructArgs& args, bool quiet, std::ostream& out, std::ostream& err) {
  const Family family = *parse_family(args.family);
  if (args.n < min_vertex_count(family) || args.n % 2 != 0) {
    err << "error: --family " << args.family << " needs an even --n >= " << min_vertex_count(family) << "\n";
    return kUsage;
  }

  PolygonDocument doc;
  try {
    doc = make_document(construct(family, args.n));
  } catch (const Error& e) {
    err << "error: construction failed in " << solver_stage(e) << ": " << e.what() << "\n";
    return kConstructionFailed;
  }

  const std::string text = render(doc, args.format);
  if (args.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(args.out_path);
  if (!(file << text)) {
    err << "error: cannot write " << args.out_path << "\n";
    return kIoError;
  }
  if (!quiet) err << "wrote " << args.out_path << "\n";
  return kOk;
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n_max < 6 || args.n_max % 2 != 0) {
    err << "error: --n-max must be an even integer >= 6\n";
    return kUsage;
  }
  std::vector<GapReport> rows;
  try {
    rows = table1(args.n_max);
  } catch (const Error& e) {
    err << "error: construction failed in " << solver_stage(e) << ": " << e.what() << "\n";
    return kConstructionFailed;
  }

  constexpr int d = 10;
  const bool csv = args.format == "csv";
  if (csv) {
    out << "n,alpha_hat,A(R_n),A(R_n-1^+),A(M_n),A(M_n'),A(B_n),UB_n\n";
  } else {
    out << "| n | alpha_hat | A(R_n) | A(R_n-1^+) | A(M_n) | A(M_n') | A(B_n) | UB_n |\n"
        << "|---:|---|---|---|---|---|---|---|\n";
  }
  const char* sep = csv ? "," : " | ";
  for (const auto& r : rows) {
    if (!csv) out << "| ";
    out << r.n << sep << format_fixed(r.alpha_hat, d) << sep << format_fixed(r.area_regular, d) << sep
        << format_fixed(r.area_regular_plus, d) << sep << format_fixed(r.area_mn, d) << sep
        << format_fixed(r.area_mn_prime, d) << sep << format_fixed(r.area_bn, d) << sep
        << format_fixed(r.upper_bound, d);
    out << (csv ? "\n" : " |\n");
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& args, bool quiet, std::ostream& out, std::ostream& err) {
  std::ifstream file(args.file);
  if (!file) {
    err << "error: cannot read " << args.file << "\n";
    return kIoError;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  PolygonDocument doc;
  try {
    doc = document_from_json(buffer.str());
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }

  bool ok = true;
  for (const auto& check : run_checks(doc, args.tol)) {
    if (check.required && !check.passed) ok = false;
    if (quiet) continue;
    out << check.name << ": " << (check.passed ? "pass" : "fail");
    if (!check.detail.empty()) out << " (" << check.detail << ")";
    out << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

void print_pair(std::ostream& out, double value, double limit) {
  out << "value " << format_fixed(value, 12) << "\n"
      << "limit " << format_fixed(limit, 12) << "\n"
      << "relative_difference " << format_fixed(std::abs(value - limit) / std::abs(limit), 12) << "\n";
}

int cmd_asymptotics(const AsymptoticsArgs& args, bool quiet, std::ostream& out, std::ostream& err) {
  if (args.n < 6 || args.n % 2 != 0) {
    err << "error: --n must be an even integer >= 6\n";
    return kUsage;
  }
  const auto& k = asymptotic_constants();
  try {
    if (!quiet) out << "series " << args.series << "\n" << "n " << args.n << "\n";
    if (args.series == "ub-gap") {
      print_pair(out, gap_vs_bound(args.n), kBoundGapLimit);
    } else if (args.series == "mn-gap") {
      print_pair(out, gap_vs_mossinghoff(args.n), k.d(args.n));
    } else if (args.series == "alpha") {
      const double numeric = *construct_bn(args.n).alpha_star;
      const double series = alpha_hat_series(args.n);
      out << "numeric " << format_fixed(numeric, 12) << "\n"
          << "series " << format_fixed(series, 12) << "\n"
          << "difference " << format_fixed(std::abs(numeric - series), 12) << "\n";
    } else {
      const double u = args.u.value_or(k.b + 1.0);
      out << "u " << format_fixed(u, 12) << "\n";
      print_pair(out, perturbation_penalty(args.n, u), penalty_coefficient() * (u - k.b) * (u - k.b));
    }
  } catch (const Error& e) {
    err << "error: construction failed in " << solver_stage(e) << ": " << e.what() << "\n";
    return kConstructionFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Small polygons of maximal area: constructions, verification and tables"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Suppress non-data output");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a polygon family member and export it");
  construct->add_option("--family", construct_args.family, "Polygon family")
      ->required()
      ->check(CLI::IsMember({"regular", "regular-plus", "mossinghoff", "mossinghoff-prime", "bn"}));
  construct->add_option("--n", construct_args.n, "Number of vertices (even)")->required();
  construct->add_option("--format", construct_args.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "svg", "tikz"}));
  construct->add_option("--out", construct_args.out_path, "Output path (default stdout)");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Area table for n = 6, 8, ..., n-max");
  table->add_option("--n-max", table_args.n_max, "Largest n (even)");
  table->add_option("--format", table_args.format, "Output format")->check(CLI::IsMember({"csv", "markdown"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Re-run geometric checks on a JSON polygon document");
  verify->add_option("--file", verify_args.file, "Polygon document")->required();
  verify->add_option("--tol", verify_args.tol, "Verification tolerance");

  AsymptoticsArgs asym_args;
  auto* asymptotics = app.add_subcommand("asymptotics", "Scaled gaps next to their large-n limits");
  asymptotics->add_option("--n", asym_args.n, "Number of vertices (even)")->required();
  asymptotics->add_option("--series", asym_args.series, "Which expansion")
      ->check(CLI::IsMember({"ub-gap", "mn-gap", "alpha", "penalty"}));
  asymptotics->add_option("--u", asym_args.u, "Perturbation parameter for --series penalty");

  for (auto* sub : {construct, table, verify, asymptotics}) sub->add_flag("--quiet", quiet, "Suppress non-data output");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("smallgon");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (construct->parsed()) return cmd_construct(construct_args, quiet, out, err);
  if (table->parsed()) return cmd_table(table_args, out, err);
  if (verify->parsed()) return cmd_verify(verify_args, quiet, out, err);
  return cmd_asymptotics(asym_args, quiet, out, err);
}

}  // namespace smallgon::cli
