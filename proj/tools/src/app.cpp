#include "amspace/app/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include <CLI11.hpp>

#include "amspace/app/checks.hpp"
#include "amspace/errors.hpp"
#include "amspace/quotient.hpp"

namespace amspace::app {

namespace {

using std::numbers::pi;

void append(std::vector<Row>& to, std::vector<Row> from) {
  for (Row& r : from) to.push_back(std::move(r));
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> v = {"sphere-curvature", "torus-curvature", "quotient", "point-structures"};
  return v;
}

const std::vector<std::string>& verify_groups() {
  static const std::vector<std::string> v = {"all", "geodesics", "cayley", "decomp", "curvature", "gradient"};
  return v;
}

void validate(const RunConfig& cfg) {
  if (cfg.grid < 32 || (cfg.grid & (cfg.grid - 1)) != 0)
    throw UsageError("--grid must be a power of two >= 32, got " + std::to_string(cfg.grid));
  if (cfg.out != "json" && cfg.out != "csv") throw UsageError("--out must be json or csv, got " + cfg.out);
  if (cfg.command == "tables") {
    if (!contains(table_names(), cfg.suite)) throw UsageError("unknown table: " + cfg.suite);
    if (cfg.suite == "point-structures" && !cfg.dump.empty())
      throw UsageError("--dump: the point-structures table has no field");
  } else if (cfg.command == "verify") {
    if (!contains(verify_groups(), cfg.suite)) throw UsageError("unknown verify group: " + cfg.suite);
  } else {
    throw UsageError("unknown command: " + cfg.command);
  }
}

std::vector<Row> run_table(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.suite == "sphere-curvature") return sphere_curvature_rows(cfg.grid);
  if (cfg.suite == "torus-curvature") return torus_curvature_rows(cfg.grid);
  if (cfg.suite == "quotient") return quotient_rows(cfg.grid);
  return point_structure_rows(cfg.seed);
}

std::vector<Row> run_verify(const RunConfig& cfg) {
  validate(cfg);
  const std::string& g = cfg.suite;
  const bool all = g == "all";
  const int n = cfg.grid;
  const std::uint64_t s = cfg.seed;
  std::vector<Row> rows;
  if (all || g == "geodesics") {
    append(rows, geodesic_rows(s));
    append(rows, am_geodesic_rows(s, std::min(n, 64)));
  }
  if (all || g == "cayley") {
    append(rows, cayley_rows(s, n));
    append(rows, fundamental_form_rows(s, n));
    append(rows, projection_rows(s, n));
  }
  if (all || g == "decomp") append(rows, decomp_rows(s, n));
  if (all || g == "curvature") {
    append(rows, sphere_curvature_rows(n));
    append(rows, holomorphic_bound_rows(s, n));
    append(rows, torus_curvature_rows(n));
    append(rows, gaussian_curvature_rows(s, n));
    append(rows, connection_curvature_rows(s));
    append(rows, quotient_rows(n));
    append(rows, quotient_property_rows(s, std::min(n, 64)));
  }
  if (all || g == "gradient") append(rows, gradient_rows(s, n));
  return rows;
}

void dump_table_field(const RunConfig& cfg, std::ostream& os) {
  validate(cfg);
  if (cfg.suite == "sphere-curvature") {
    const Grid s = Grid::sphere(cfg.grid, cfg.grid);
    dump_csv(sample(s, [](double, double z) { return cplx(std::cos(pi * z), 0); }), os);
  } else if (cfg.suite == "torus-curvature") {
    const Grid t = Grid::torus(cfg.grid, cfg.grid);
    dump_csv(sample(t, [](double x, double) { return cplx(std::cos(x), 0); }), os);
  } else if (cfg.suite == "quotient") {
    const Grid t = Grid::torus(cfg.grid, cfg.grid);
    const MField a = alpha_to_form(sample(t, [](double x, double) { return cplx(std::cos(x), 0); }));
    const MField b = alpha_to_form(sample(t, [](double, double y) { return cplx(std::cos(y), 0); }));
    const AssocPair base = base_pair(t);
    const VField br = brace(a, b);
    const VField jb = zip(base.J, br, [](const Mat2& J, const Vec2& v) { return Vec2(J * v); });
    dump_csv(vector_divergence(jb, base.g), os);
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Curvature tables and verification suites for spaces of associated metrics"};
  cli.require_subcommand(1);
  RunConfig cfg;

  auto* tables = cli.add_subcommand("tables", "Emit a table of computed values with reference values");
  tables->add_option("table", cfg.suite, "sphere-curvature | torus-curvature | quotient | point-structures")->required();
  tables->add_option("--grid", cfg.grid, "lattice size per axis, a power of two >= 32");
  tables->add_option("--out", cfg.out, "json | csv");
  tables->add_option("--dump", cfg.dump, "write the table's input field as CSV to this path");
  tables->add_option("--seed", cfg.seed, "seed for the randomized rows");

  auto* verify = cli.add_subcommand("verify", "Run a verification group");
  verify->add_option("group", cfg.suite, "all | geodesics | cayley | decomp | curvature | gradient")->required();
  verify->add_option("--seed", cfg.seed, "seed for random inputs");
  verify->add_option("--grid", cfg.grid, "lattice size per axis, a power of two >= 32");
  verify->add_option("--out", cfg.out, "json | csv");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << cli.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << cli.help();
    return 2;
  }
  cfg.command = tables->parsed() ? "tables" : "verify";

  std::vector<Row> rows;
  try {
    rows = cfg.command == "tables" ? run_table(cfg) : run_verify(cfg);
    if (!cfg.dump.empty()) {
      std::ofstream f(cfg.dump);
      if (!f) throw UsageError("--dump: cannot open " + cfg.dump);
      dump_table_field(cfg, f);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (cfg.out == "csv") {
    write_csv(out, rows);
  } else {
    write_json(out, cfg, rows);
  }
  return all_pass(rows) ? 0 : 1;
}

}  // namespace amspace::app
