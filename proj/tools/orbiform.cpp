// orbiform: Cheeger constants of Reuleaux polygons from the command line.
//
//   orbiform cheeger  --regular N | --random N,steps,seed | --input file.json
//   orbiform table1   [--check] [--n N] [--format csv|json]
//   orbiform verify   [--only NAME]
//   orbiform optimize --regular N | --random N,steps,seed | --input file.json
//   orbiform minarea  [--r R | --grid K] [--svg PATH]
//
// Exit status: 0 ok, 2 bad input, 3 a verification failed.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbiform/blaschke.hpp"
#include "orbiform/bounds.hpp"
#include "orbiform/cheeger.hpp"
#include "orbiform/constants.hpp"
#include "orbiform/error.hpp"
#include "orbiform/io.hpp"
#include "orbiform/minarea.hpp"
#include "orbiform/reuleaux.hpp"
#include "orbiform/verify.hpp"

namespace {

using orbiform::Error;
using orbiform::ErrorCode;
using orbiform::ReuleauxPolygon;
using json = orbiform::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCheck = 3;

struct Source {
  int regular = 0;
  std::string random;
  std::string input;
};

struct RandomSpec {
  int n = 0;
  int steps = 0;
  std::uint64_t seed = 0;
};

RandomSpec parse_random(const std::string& text) {
  RandomSpec spec;
  std::istringstream in(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(in, part, ',')) parts.push_back(part);
  if (parts.size() != 3) throw Error(ErrorCode::kInvalidArgument, "--random expects N,steps,seed");
  try {
    spec.n = std::stoi(parts[0]);
    spec.steps = std::stoi(parts[1]);
    spec.seed = std::stoull(parts[2]);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "--random expects integers N,steps,seed");
  }
  if (spec.n < 1 || spec.steps < 0) throw Error(ErrorCode::kInvalidArgument, "--random needs N >= 1, steps >= 0");
  return spec;
}

ReuleauxPolygon load(const Source& src) {
  const int given = (src.regular != 0) + !src.random.empty() + !src.input.empty();
  if (given != 1) throw Error(ErrorCode::kInvalidArgument, "give exactly one of --regular, --random, --input");
  if (src.regular != 0) return orbiform::regular(src.regular);
  if (!src.random.empty()) {
    const RandomSpec r = parse_random(src.random);
    return orbiform::random_polygon(r.n, r.steps, r.seed);
  }
  return orbiform::io::polygon_from_file(src.input);
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--regular", src.regular, "regular Reuleaux (2N+1)-gon")->check(CLI::PositiveNumber);
  cmd->add_option("--random", src.random, "random walk N,steps,seed from the regular polygon");
  cmd->add_option("--input", src.input, "polygon JSON {\"vertices\": [[x, y], ...]}");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

int report(const Error& e) {
  json doc{{"error", std::string(orbiform::to_string(e.code()))}, {"message", e.what()}};
  std::cerr << doc.dump(2) << "\n";
  return kExitInput;
}

int cmd_cheeger(const Source& src, double tol, const std::string& format, const std::string& svg,
                const std::string& output) {
  const ReuleauxPolygon poly = load(src);
  const orbiform::CheegerSolution sol = orbiform::cheeger_set(poly, tol);
  const std::vector<orbiform::io::SvgLayer> layers = {
      {poly.region(), "black", 2.0}, {sol.inner, "steelblue", 2.0}, {sol.cheeger_set, "firebrick", 2.0}};
  if (!svg.empty()) emit(orbiform::io::svg_document(layers), svg);

  if (format == "svg") {
    emit(orbiform::io::svg_document(layers), output);
  } else if (format == "csv") {
    std::string out = "k,alpha,beta,j,alpha_p,beta_p\n";
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const long i = static_cast<long>(k);
      const orbiform::ArcContact& c = sol.contacts[k];
      out += std::to_string(k + 1) + "," + orbiform::io::num(poly.alpha(i)) + "," + orbiform::io::num(poly.beta(i)) +
             "," + orbiform::io::num(poly.arc_length(i)) + "," + (c.empty ? "" : orbiform::io::num(c.alpha_p)) + "," +
             (c.empty ? "" : orbiform::io::num(c.beta_p)) + "\n";
    }
    emit(out, output);
  } else {
    json doc = orbiform::io::to_json(sol);
    doc["inradius"] = poly.inradius();
    emit(doc.dump(2) + "\n", output);
  }
  return kExitOk;
}

int cmd_table1(bool check, int n, const std::string& format, const std::string& output) {
  std::vector<orbiform::BoundsRow> rows = orbiform::table1();
  if (n != 0) {
    if (n < 2 || n > 9) throw Error(ErrorCode::kInvalidArgument, "--n must lie in 2..9");
    rows = {rows[static_cast<std::size_t>(n - 2)]};
  }
  if (format == "json") {
    json doc = json::array();
    for (const auto& r : rows) doc.push_back(orbiform::io::to_json(r));
    emit(doc.dump(2) + "\n", output);
  } else {
    emit(orbiform::io::table_csv(rows), output);
  }
  if (!check) return kExitOk;
  bool ok = true;
  for (const auto& r : rows) {
    const auto& ref = orbiform::constants::kTable1[static_cast<std::size_t>(r.n - 2)];
    const double tol = orbiform::constants::kTableTolerance;
    const bool row_ok =
        std::abs(r.tau - ref.tau) <= tol && std::abs(r.h_max - ref.h_max) <= tol && std::abs(r.h_min - ref.h_min) <= tol;
    if (!row_ok) std::cerr << "row N=" << r.n << " deviates from the published values\n";
    ok = ok && row_ok;
  }
  std::cerr << (ok ? "table check passed\n" : "table check FAILED\n");
  return ok ? kExitOk : kExitCheck;
}

int cmd_verify(const std::string& only, const std::string& output) {
  if (!only.empty() && !orbiform::verify::known(only)) {
    std::string names;
    for (const auto& e : orbiform::verify::registry()) names += " " + std::string(e.name);
    throw Error(ErrorCode::kInvalidArgument, "unknown check '" + only + "'; available:" + names);
  }
  const std::vector<orbiform::Check> checks = orbiform::verify::run(only);
  json doc = json::array();
  std::vector<std::string> failed;
  for (const auto& c : checks) {
    doc.push_back(orbiform::io::to_json(c));
    if (!c.pass) failed.push_back(c.name);
  }
  json out{{"checks", doc}, {"passed", failed.empty()}, {"failed", failed}};
  emit(out.dump(2) + "\n", output);
  return failed.empty() ? kExitOk : kExitCheck;
}

int cmd_optimize(const Source& src, int iters, double tol, const std::string& format, const std::string& output) {
  const ReuleauxPolygon start = load(src);
  orbiform::AscentOptions opt;
  opt.max_iterations = iters;
  opt.gradient_tolerance = tol;
  const orbiform::DeformationTrajectory traj = orbiform::local_maximize(start, opt);
  json summary{{"termination", std::string(orbiform::to_string(traj.reason))},
               {"note", traj.note},
               {"initial_h", traj.steps.front().h},
               {"final_h", traj.final_h()},
               {"accepted_steps", traj.steps.size() - 1}};
  if (format == "json") {
    summary["final_polygon"] = orbiform::io::to_json(traj.final_polygon());
    emit(summary.dump(2) + "\n", output);
  } else {
    emit(orbiform::io::trajectory_csv(traj), output);
    std::cerr << summary.dump() << "\n";
  }
  return kExitOk;
}

int cmd_minarea(std::optional<double> r, int grid, const std::string& svg, const std::string& output) {
  std::vector<double> radii;
  const double lo = orbiform::triangle_inradius();
  if (r) {
    radii.push_back(*r);
  } else {
    if (grid < 2) throw Error(ErrorCode::kInvalidArgument, "--grid needs at least 2 points");
    for (int i = 0; i < grid; ++i) radii.push_back(lo + (0.5 - lo) * i / grid);
  }
  emit(orbiform::io::profile_csv(radii), output);
  if (!svg.empty()) {
    const ReuleauxPolygon shape = orbiform::min_area_polygon(radii.front());
    const std::vector<orbiform::io::SvgLayer> layers = {
        {shape.region(), "black", 2.0},
        {orbiform::ArcRegion::disk({0.0, 0.0}, shape.inradius()), "gray", 1.0},
        {orbiform::ArcRegion::disk({0.0, 0.0}, 1.0 - shape.inradius()), "gray", 1.0}};
    emit(orbiform::io::svg_document(layers), svg);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cheeger constants of Reuleaux polygons"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  app.add_option("-o,--output", output, "write the main output to a file instead of stdout");

  Source cheeger_src;
  double cheeger_tol = orbiform::kDefaultSolverTolerance;
  std::string cheeger_format = "json";
  std::string cheeger_svg;
  CLI::App* cheeger = app.add_subcommand("cheeger", "Cheeger radius, constant and contact arcs");
  add_source(cheeger, cheeger_src);
  cheeger->add_option("--tol", cheeger_tol, "bisection tolerance on R")->check(CLI::PositiveNumber);
  cheeger->add_option("--format", cheeger_format)->check(CLI::IsMember({"json", "csv", "svg"}));
  cheeger->add_option("--svg", cheeger_svg, "also write an SVG of the body, inner set and Cheeger set");

  bool table_check = false;
  int table_n = 0;
  std::string table_format = "csv";
  CLI::App* table = app.add_subcommand("table1", "rates and extremal arc lengths for N = 2..9");
  table->add_flag("--check", table_check, "compare with the published table at 1e-3");
  table->add_option("--n", table_n, "single row");
  table->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));

  std::string verify_only;
  CLI::App* verify = app.add_subcommand("verify", "run the reproduction checks");
  verify->add_option("--only", verify_only, "run a single named check");

  Source opt_src;
  int opt_iters = 200;
  double opt_tol = 1e-9;
  std::string opt_format = "csv";
  CLI::App* optimize = app.add_subcommand("optimize", "coordinate ascent of h over Blaschke deformations");
  add_source(optimize, opt_src);
  optimize->add_option("--iters", opt_iters)->check(CLI::PositiveNumber);
  optimize->add_option("--tol", opt_tol, "first-variation tolerance")->check(CLI::PositiveNumber);
  optimize->add_option("--format", opt_format)->check(CLI::IsMember({"json", "csv"}));

  std::optional<double> min_r;
  int min_grid = 50;
  std::string min_svg;
  CLI::App* minarea = app.add_subcommand("minarea", "least area at prescribed inradius");
  minarea->add_option("--r", min_r, "single inradius");
  minarea->add_option("--grid", min_grid, "number of grid points on [1-1/sqrt(3), 1/2)");
  minarea->add_option("--svg", min_svg, "SVG of the optimal polygon at the first radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (cheeger->parsed()) return cmd_cheeger(cheeger_src, cheeger_tol, cheeger_format, cheeger_svg, output);
    if (table->parsed()) return cmd_table1(table_check, table_n, table_format, output);
    if (verify->parsed()) return cmd_verify(verify_only, output);
    if (optimize->parsed()) return cmd_optimize(opt_src, opt_iters, opt_tol, opt_format, output);
    if (minarea->parsed()) return cmd_minarea(min_r, min_grid, min_svg, output);
  } catch (const Error& e) {
    return report(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
