// confgeo: build, classify and probe the five-normal roof family, and solve
// prescribed-area reconstruction problems.
//
// Exit codes: 0 success (or member), 1 domain-level negative (not a member,
// conditions violated), 2 usage error, 3 solver non-convergence.

#include <CLI11.hpp>

#include <confgeo/analysis.hpp>
#include <confgeo/family.hpp>
#include <confgeo/geometry.hpp>
#include <confgeo/io.hpp>
#include <confgeo/minkowski.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

// Wider than the library default so perimeter tuples typed with ~8
// significant digits still land on the membership set they were rounded from.
constexpr double kCliClassifyTol = 1e-7;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << content;
  if (!out) throw UsageError("failed writing output file: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw UsageError("not a number: '" + item + "'");
    values.push_back(v);
  }
  return values;
}

// A point in perimeter space: one of the named basis directions or five
// comma-separated reals.
confgeo::PerimeterVector parse_point5(const std::string& text) {
  const confgeo::BasisVectors basis = confgeo::basis_vectors();
  if (text == "vI") return basis.vI;
  if (text == "vII") return basis.vII;
  if (text == "vIII") return basis.vIII;
  const std::vector<double> values = parse_reals(text);
  if (values.size() != 5)
    throw UsageError("expected 5 comma-separated values or one of vI, vII, vIII: '" + text +
                     "'");
  confgeo::PerimeterVector v;
  for (std::size_t i = 0; i < 5; ++i) v[i] = values[i];
  return v;
}

int run_build(double x, double y, const std::string& format, std::string out) {
  confgeo::Polytope poly;
  confgeo::PerimeterVector L;
  try {
    poly = confgeo::build_polytope({x, y, {0.0, 0.0, 0.0}});
    L = confgeo::perimeters_from_xy({x, y, {0.0, 0.0, 0.0}});
  } catch (const confgeo::InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const confgeo::FamilyClassification cls = confgeo::classify(L);

  if (out.empty()) out = format == "off" ? "polytope.off" : "polytope.json";
  if (format == "json") {
    write_file(out, confgeo::polytope_report_json(poly));
  } else {
    write_file(out, confgeo::to_off(poly));
  }

  std::cout << "type: " << confgeo::family_type_display(cls.verdict) << "\n";
  std::cout << "perimeters:";
  for (int i = 0; i < 5; ++i) std::cout << ' ' << confgeo::format_double(L[i]);
  std::cout << "\n";
  return kExitOk;
}

int run_classify(const std::string& L_text, double tol, const std::string& out) {
  const confgeo::PerimeterVector L = parse_point5(L_text);
  const confgeo::FamilyClassification cls = confgeo::classify(L, tol);
  const std::string json = confgeo::classification_json(L, cls);
  std::cout << json << "\n";
  if (!out.empty()) write_file(out, json);
  return cls.verdict == confgeo::FamilyType::NotMember ? kExitNegative : kExitOk;
}

int run_probe(const std::string& center_text, const std::string& direction_text, double radius,
              int steps, const std::string& out) {
  const confgeo::PerimeterVector center = parse_point5(center_text);
  const confgeo::PerimeterVector direction = parse_point5(direction_text);
  confgeo::ProbeReport report;
  try {
    report = confgeo::probe_line(center, direction, radius, steps);
  } catch (const confgeo::DegenerateDirectionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  write_file(out + ".json", confgeo::probe_report_json(report));
  write_file(out + ".csv", confgeo::probe_report_csv(report));
  std::cout << "half_branch_count: " << report.half_branch_count << "\n";
  return kExitOk;
}

int run_witness(const std::string& out) {
  const confgeo::ConvexityWitness w = confgeo::convexity_witness();
  const std::string json = confgeo::witness_json(w);
  std::cout << json << "\n";
  if (!out.empty()) write_file(out, json);
  return kExitOk;
}

int run_minkowski(const std::string& problem_path, double tol, int max_iter,
                  const std::string& out) {
  confgeo::MinkowskiProblem problem;
  try {
    problem = confgeo::parse_problem_json(read_file(problem_path));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  confgeo::MinkowskiSolution solution;
  try {
    solution = confgeo::solve_minkowski(problem, tol, max_iter);
  } catch (const confgeo::ConditionsViolatedError& e) {
    std::cout << confgeo::condition_report_json(e.report) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const confgeo::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (iterations=" << e.iterations
              << ", residual=" << confgeo::format_double(e.residual) << ")\n";
    return kExitNoConvergence;
  } catch (const confgeo::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  }
  write_file(out + ".json", confgeo::solution_json(problem, solution));
  write_file(out + ".off", confgeo::to_off(solution.polytope));
  std::cout << "iterations: " << solution.iterations << "\n";
  std::cout << "area_residual: " << confgeo::format_double(solution.area_residual) << "\n";
  return kExitOk;
}

int run_check_closure(const std::string& problem_path, const std::string& out) {
  confgeo::MinkowskiProblem problem;
  try {
    problem = confgeo::parse_problem_json(read_file(problem_path));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const confgeo::ConditionReport report = confgeo::check_conditions(problem);
  const std::string json = confgeo::condition_report_json(report);
  std::cout << json << "\n";
  if (!out.empty()) write_file(out, json);
  return report.all_ok() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-geometry toolkit for the five-normal roof family"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Construct a family polytope from edge parameters");
  double x = 0.0, y = 0.0;
  std::string build_format = "json";
  std::string build_out;
  build->add_option("--x", x, "Half-length of the short base edge pair")->required();
  build->add_option("--y", y, "Half-length of the long base edge pair")->required();
  build->add_option("--format", build_format, "Report format")
      ->check(CLI::IsMember({"json", "off"}));
  build->add_option("--out", build_out, "Output path (default polytope.json / polytope.off)");

  // classify
  auto* classify = app.add_subcommand("classify", "Classify a perimeter 5-tuple");
  std::string L_text;
  double class_tol = kCliClassifyTol;
  std::string classify_out;
  classify->add_option("--L", L_text, "Five comma-separated perimeters")->required();
  classify->add_option("--tol", class_tol, "Relative tolerance for the membership equalities")
      ->check(CLI::PositiveNumber);
  classify->add_option("--out", classify_out, "Also write the verdict JSON to this path");

  // probe
  auto* probe = app.add_subcommand("probe", "Classify samples along a line in perimeter space");
  std::string center_text = "vII";
  std::string direction_text = "vI";
  double radius = 0.12;
  int steps = 240;
  std::string probe_out = "probe";
  probe->add_option("--center", center_text, "Line center: vI, vII, vIII or 5 reals");
  probe->add_option("--direction", direction_text, "Line direction: vI, vII, vIII or 5 reals");
  probe->add_option("--radius", radius, "Half-length of the sampled interval")
      ->check(CLI::PositiveNumber);
  probe->add_option("--steps", steps, "Samples per side (minimum 8)")
      ->check(CLI::Range(8, 1 << 24));
  probe->add_option("--out", probe_out, "Output base path (writes <out>.json and <out>.csv)");

  // witness-nonconvex
  auto* witness = app.add_subcommand(
      "witness-nonconvex", "Two members whose midpoint is not a member");
  std::string witness_out;
  witness->add_option("--out", witness_out, "Also write the witness JSON to this path");

  // minkowski
  auto* minkowski = app.add_subcommand(
      "minkowski", "Recover a polytope from prescribed face normals and areas");
  std::string problem_path;
  double solver_tol = 1e-6;
  int max_iter = 10000;
  std::string minkowski_out = "solution";
  minkowski->add_option("--problem", problem_path, "Problem JSON path")->required();
  minkowski->add_option("--tol", solver_tol, "Relative area residual target")
      ->check(CLI::PositiveNumber);
  minkowski->add_option("--max-iter", max_iter, "Iteration budget")
      ->check(CLI::NonNegativeNumber);
  minkowski->add_option("--out", minkowski_out,
                        "Output base path (writes <out>.json and <out>.off)");

  // check-closure
  auto* closure = app.add_subcommand(
      "check-closure", "Validate the existence conditions of a problem file");
  std::string closure_problem;
  std::string closure_out;
  closure->add_option("--problem", closure_problem, "Problem JSON path")->required();
  closure->add_option("--out", closure_out, "Also write the condition report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return run_build(x, y, build_format, build_out);
    if (classify->parsed()) return run_classify(L_text, class_tol, classify_out);
    if (probe->parsed()) return run_probe(center_text, direction_text, radius, steps, probe_out);
    if (witness->parsed()) return run_witness(witness_out);
    if (minkowski->parsed())
      return run_minkowski(problem_path, solver_tol, max_iter, minkowski_out);
    if (closure->parsed()) return run_check_closure(closure_problem, closure_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  }
  return kExitUsage;
}
