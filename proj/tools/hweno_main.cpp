// Command-line front end: run one benchmark problem or a grid-refinement
// study, writing solution fields, run reports, and convergence tables as CSV.
#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hweno/analysis.hpp"
#include "hweno/csv.hpp"
#include "hweno/problem.hpp"
#include "hweno/solver.hpp"

namespace {

using namespace hweno;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_solver = 2;

struct RunConfig {
  std::string problem;
  std::string scheme = "l-hweno";
  int nx = 0;  ///< 0 = problem default
  int ny = 0;
  double cfl = 0.6;
  std::array<double, 3> gamma{0.98, 0.01, 0.01};
  std::array<double, 3> d{0.98, 0.01, 0.01};
  double epsilon = 1e-6;
  std::string limiter_mode = "staged";
  std::string out_dir = "out";
};

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "problem", "scheme", "nx", "ny",      "cfl",          "gamma0",
      "gamma1",  "gamma2", "d0", "d1",      "d2",           "epsilon",
      "limiter_mode",      "out_dir"};
  return keys;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// Flat key=value config file; '#' starts a comment, unknown keys rejected.
std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      std::string known;
      for (const auto& k : keys) known += (known.empty() ? "" : ", ") + k;
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key '" + key + "' (known keys: " + known +
                               ")");
    }
    kv[key] = value;
  }
  return kv;
}

void apply_config_map(const std::map<std::string, std::string>& kv, RunConfig& rc) {
  auto as_int = [](const std::string& k, const std::string& v) {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::runtime_error("bad integer for " + k + ": " + v);
    return x;
  };
  auto as_double = [](const std::string& k, const std::string& v) {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::runtime_error("bad number for " + k + ": " + v);
    return x;
  };
  for (const auto& [k, v] : kv) {
    if (k == "problem") rc.problem = v;
    else if (k == "scheme") rc.scheme = v;
    else if (k == "nx") rc.nx = as_int(k, v);
    else if (k == "ny") rc.ny = as_int(k, v);
    else if (k == "cfl") rc.cfl = as_double(k, v);
    else if (k == "gamma0") rc.gamma[0] = as_double(k, v);
    else if (k == "gamma1") rc.gamma[1] = as_double(k, v);
    else if (k == "gamma2") rc.gamma[2] = as_double(k, v);
    else if (k == "d0") rc.d[0] = as_double(k, v);
    else if (k == "d1") rc.d[1] = as_double(k, v);
    else if (k == "d2") rc.d[2] = as_double(k, v);
    else if (k == "epsilon") rc.epsilon = as_double(k, v);
    else if (k == "limiter_mode") rc.limiter_mode = v;
    else if (k == "out_dir") rc.out_dir = v;
  }
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_effective_config(const std::string& path, const RunConfig& rc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config file: " + path);
  out << "problem = " << rc.problem << "\n"
      << "scheme = " << rc.scheme << "\n"
      << "nx = " << rc.nx << "\n"
      << "ny = " << rc.ny << "\n"
      << "cfl = " << fmt17(rc.cfl) << "\n"
      << "gamma0 = " << fmt17(rc.gamma[0]) << "\n"
      << "gamma1 = " << fmt17(rc.gamma[1]) << "\n"
      << "gamma2 = " << fmt17(rc.gamma[2]) << "\n"
      << "d0 = " << fmt17(rc.d[0]) << "\n"
      << "d1 = " << fmt17(rc.d[1]) << "\n"
      << "d2 = " << fmt17(rc.d[2]) << "\n"
      << "epsilon = " << fmt17(rc.epsilon) << "\n"
      << "limiter_mode = " << rc.limiter_mode << "\n"
      << "out_dir = " << rc.out_dir << "\n";
}

SchemeConfig scheme_config(const RunConfig& rc) {
  SchemeConfig sc;
  sc.scheme = scheme_from_string(rc.scheme);
  sc.limiter = limiter_mode_from_string(rc.limiter_mode);
  sc.cfl = rc.cfl;
  sc.gamma = rc.gamma;
  sc.d = rc.d;
  sc.epsilon = rc.epsilon;
  sc.validate();
  return sc;
}

std::string run_tag(const RunConfig& rc, bool two_d) {
  std::string tag = rc.problem + "-" + rc.scheme + "-" + std::to_string(rc.nx);
  if (two_d) tag += "x" + std::to_string(rc.ny);
  return tag;
}

CsvTable solution_table(const Grid1D& g, const HermiteState1D& s) {
  CsvTable t;
  t.header = {"x"};
  const int nc = s.ncomp();
  for (int c = 0; c < nc; ++c) t.header.push_back("u" + std::to_string(c));
  for (int c = 0; c < nc; ++c) t.header.push_back("v" + std::to_string(c));
  for (int i = 0; i < g.nx; ++i) {
    std::vector<double> row;
    row.push_back(g.x(i));
    for (int c = 0; c < nc; ++c) row.push_back(s.u[c](i));
    for (int c = 0; c < nc; ++c) row.push_back(s.v[c](i));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable solution_table(const Grid2D& g, const HermiteState2D& s) {
  CsvTable t;
  t.header = {"x", "y"};
  const int nc = s.ncomp();
  for (int c = 0; c < nc; ++c) t.header.push_back("u" + std::to_string(c));
  for (int c = 0; c < nc; ++c) t.header.push_back("v" + std::to_string(c));
  for (int c = 0; c < nc; ++c) t.header.push_back("w" + std::to_string(c));
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      std::vector<double> row;
      row.push_back(g.x(i));
      row.push_back(g.y(j));
      for (int c = 0; c < nc; ++c) row.push_back(s.u[c](i, j));
      for (int c = 0; c < nc; ++c) row.push_back(s.v[c](i, j));
      for (int c = 0; c < nc; ++c) row.push_back(s.w[c](i, j));
      t.rows.push_back(std::move(row));
    }
  return t;
}

/// Loads the cached fine-grid reference solution, generating it with the
/// five-point reference scheme if it does not exist yet.
void load_or_build_reference(const Problem1D& P, int ref_nx, const std::string& dir,
                             std::vector<double>& xs, std::vector<double>& us) {
  const std::string path = dir + "/refs/" + P.name + "-" + std::to_string(ref_nx) +
                           ".csv";
  std::ifstream probe(path);
  if (!probe) {
    SchemeConfig sc;
    sc.scheme = Scheme::weno_js;
    sc.limiter = LimiterMode::off;
    const Grid1D g = make_grid(P, ref_nx);
    HermiteState1D s = init_state(P, g);
    advance_1d(P.system, sc, g, P.bc, s, P.t_end, 1.0, P.positivity, P.post_step);
    CsvTable t;
    t.header = {"x", "u0"};
    for (int i = 0; i < g.nx; ++i) t.rows.push_back({g.x(i), s.u[0](i)});
    write_csv(path, t);
  }
  const CsvTable t = read_csv(path);
  xs.clear();
  us.clear();
  for (const auto& row : t.rows) {
    xs.push_back(row.at(0));
    us.push_back(row.at(1));
  }
}

void print_report(const CsvTable& report) {
  for (size_t c = 0; c < report.header.size(); ++c) {
    std::printf("%s%s = ", c ? "  " : "", report.header[c].c_str());
    std::printf("%.6g", report.rows[0][c]);
  }
  std::printf("\n");
}

int do_run(RunConfig rc, double dt_exponent, double t_end_override, int reference_nx,
           bool emit_fields) {
  const bool two_d = is_problem_2d(rc.problem);
  const SchemeConfig sc = scheme_config(rc);

  double l1 = std::numeric_limits<double>::quiet_NaN();
  double linf = std::numeric_limits<double>::quiet_NaN();
  double l1_ref = std::numeric_limits<double>::quiet_NaN();
  RunStats st;

  if (!two_d) {
    const Problem1D P = make_problem_1d(rc.problem);
    if (rc.nx <= 0) rc.nx = P.default_nx;
    rc.ny = 0;
    const double t_end = t_end_override > 0.0 ? t_end_override : P.t_end;
    const Grid1D g = make_grid(P, rc.nx);
    HermiteState1D s = init_state(P, g);
    st = advance_1d(P.system, sc, g, P.bc, s, t_end, dt_exponent, P.positivity,
                    P.post_step);
    if (P.exact && t_end_override <= 0.0) {
      const ErrorNorms e = error_norms(P, g, s, st.t_final);
      l1 = e.l1;
      linf = e.linf;
    }
    if (emit_fields)
      write_csv(rc.out_dir + "/solution-" + run_tag(rc, false) + ".csv",
                solution_table(g, s));
    if (reference_nx > 0) {
      std::vector<double> xr, ur, xs, us;
      load_or_build_reference(P, reference_nx, rc.out_dir, xr, ur);
      for (int i = 0; i < g.nx; ++i) {
        xs.push_back(g.x(i));
        us.push_back(s.u[0](i));
      }
      l1_ref = l1_distance_to_reference(xs, us, xr, ur);
    }
  } else {
    const Problem2D P = make_problem_2d(rc.problem);
    if (rc.nx <= 0) rc.nx = P.default_nx;
    if (rc.ny <= 0) rc.ny = P.default_ny;
    const double t_end = t_end_override > 0.0 ? t_end_override : P.t_end;
    const Grid2D g = make_grid(P, rc.nx, rc.ny);
    HermiteState2D s = init_state(P, g);
    st = advance_2d(P.system, sc, g, P.bc, P.step, s, t_end, dt_exponent,
                    P.positivity, P.post_step);
    if (P.exact && t_end_override <= 0.0) {
      const ErrorNorms e = error_norms(P, g, s, st.t_final);
      l1 = e.l1;
      linf = e.linf;
    }
    if (emit_fields)
      write_csv(rc.out_dir + "/solution-" + run_tag(rc, true) + ".csv",
                solution_table(g, s));
    if (reference_nx > 0)
      throw std::runtime_error("--reference-nx supports 1D problems only");
  }

  CsvTable report;
  report.header = {"nx", "ny",   "steps", "wall_seconds", "t_final",
                   "l1", "linf", "l1_ref"};
  report.rows.push_back({static_cast<double>(rc.nx), static_cast<double>(rc.ny),
                         static_cast<double>(st.steps), st.wall_seconds, st.t_final,
                         l1, linf, l1_ref});
  write_csv(rc.out_dir + "/report-" + run_tag(rc, two_d) + ".csv", report);
  write_effective_config(rc.out_dir + "/config-" + run_tag(rc, two_d) + ".txt", rc);
  std::printf("%s  scheme=%s  ", rc.problem.c_str(), rc.scheme.c_str());
  print_report(report);
  return exit_ok;
}

int do_convergence(RunConfig rc, double dt_exponent, std::vector<int> grids) {
  const bool two_d = is_problem_2d(rc.problem);
  const SchemeConfig sc = scheme_config(rc);
  if (grids.empty()) throw std::runtime_error("convergence: --grids is required");

  std::vector<ConvergenceRow> rows;
  if (!two_d) {
    const Problem1D P = make_problem_1d(rc.problem);
    if (!P.exact)
      throw std::runtime_error(rc.problem + ": no exact solution; cannot study");
    rows = convergence_study_1d(P, sc, grids, dt_exponent);
  } else {
    const Problem2D P = make_problem_2d(rc.problem);
    if (!P.exact)
      throw std::runtime_error(rc.problem + ": no exact solution; cannot study");
    rows = convergence_study_2d(P, sc, grids, dt_exponent);
  }

  const bool with_orders = rows.size() > 1;
  CsvTable t;
  t.header = with_orders ? std::vector<std::string>{"n", "l1", "order_l1", "linf",
                                                    "order_linf", "steps",
                                                    "wall_seconds"}
                         : std::vector<std::string>{"n", "l1", "linf", "steps",
                                                    "wall_seconds"};
  std::printf("%6s %13s %8s %13s %8s %9s %9s\n", "n", "l1", "order", "linf", "order",
              "steps", "wall[s]");
  for (const auto& r : rows) {
    if (with_orders)
      t.rows.push_back({static_cast<double>(r.n), r.l1, r.order_l1, r.linf,
                        r.order_linf, static_cast<double>(r.steps), r.wall_seconds});
    else
      t.rows.push_back({static_cast<double>(r.n), r.l1, r.linf,
                        static_cast<double>(r.steps), r.wall_seconds});
    std::printf("%6d %13.3e %8.2f %13.3e %8.2f %9lld %9.2f\n", r.n, r.l1, r.order_l1,
                r.linf, r.order_linf, r.steps, r.wall_seconds);
  }
  write_csv(rc.out_dir + "/convergence-" + rc.problem + "-" + rc.scheme + ".csv", t);
  return exit_ok;
}

void add_common_options(CLI::App* cmd, RunConfig& cli, std::string& config_path) {
  cmd->add_option("--config", config_path, "key=value config file");
  cmd->add_option("--problem", cli.problem, "benchmark problem name");
  cmd->add_option("--scheme", cli.scheme, "l-hweno or weno-js");
  cmd->add_option("--nx", cli.nx, "cells in x (0 = problem default)");
  cmd->add_option("--ny", cli.ny, "cells in y (2D only, 0 = problem default)");
  cmd->add_option("--cfl", cli.cfl, "CFL number");
  cmd->add_option("--gamma0", cli.gamma[0], "flux linear weight 0");
  cmd->add_option("--gamma1", cli.gamma[1], "flux linear weight 1");
  cmd->add_option("--gamma2", cli.gamma[2], "flux linear weight 2");
  cmd->add_option("--d0", cli.d[0], "limiter linear weight 0");
  cmd->add_option("--d1", cli.d[1], "limiter linear weight 1");
  cmd->add_option("--d2", cli.d[2], "limiter linear weight 2");
  cmd->add_option("--epsilon", cli.epsilon, "smoothness regularization");
  cmd->add_option("--limiter-mode,--limiter_mode", cli.limiter_mode,
                  "staged or off");
  cmd->add_option("--out-dir,--out_dir", cli.out_dir, "output directory");
}

/// Defaults <- config file <- explicitly set CLI flags.
RunConfig merge_config(const CLI::App* cmd, const RunConfig& cli,
                       const std::string& config_path) {
  RunConfig rc;
  if (!config_path.empty()) apply_config_map(parse_config_file(config_path), rc);
  auto set = [cmd](const char* flag) { return cmd->count(flag) > 0; };
  if (set("--problem")) rc.problem = cli.problem;
  if (set("--scheme")) rc.scheme = cli.scheme;
  if (set("--nx")) rc.nx = cli.nx;
  if (set("--ny")) rc.ny = cli.ny;
  if (set("--cfl")) rc.cfl = cli.cfl;
  if (set("--gamma0")) rc.gamma[0] = cli.gamma[0];
  if (set("--gamma1")) rc.gamma[1] = cli.gamma[1];
  if (set("--gamma2")) rc.gamma[2] = cli.gamma[2];
  if (set("--d0")) rc.d[0] = cli.d[0];
  if (set("--d1")) rc.d[1] = cli.d[1];
  if (set("--d2")) rc.d[2] = cli.d[2];
  if (set("--epsilon")) rc.epsilon = cli.epsilon;
  if (set("--limiter-mode")) rc.limiter_mode = cli.limiter_mode;
  if (set("--out-dir")) rc.out_dir = cli.out_dir;
  if (rc.problem.empty())
    throw std::runtime_error("no problem selected (use --problem or a config file)");
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fifth-order Hermite WENO solver for hyperbolic conservation laws"};
  app.require_subcommand(1);

  RunConfig run_cli, conv_cli;
  std::string run_config_path, conv_config_path;
  double run_dt_exp = 1.0, conv_dt_exp = 1.0, t_end_override = -1.0;
  int reference_nx = 0;
  bool no_fields = false;
  std::vector<int> grids;

  CLI::App* run = app.add_subcommand("run", "run one problem and write outputs");
  add_common_options(run, run_cli, run_config_path);
  run->add_option("--dt-exponent", run_dt_exp,
                  "time step scales like (cell size)^exponent");
  run->add_option("--t-end", t_end_override, "stop at this time instead");
  run->add_option("--reference-nx", reference_nx,
                  "compare with a cached fine-grid reference run (1D)");
  run->add_flag("--no-fields", no_fields, "skip the solution CSV");

  CLI::App* conv = app.add_subcommand("convergence", "grid refinement study");
  add_common_options(conv, conv_cli, conv_config_path);
  conv->add_option("--dt-exponent", conv_dt_exp,
                   "time step scales like (cell size)^exponent");
  conv->add_option("--grids", grids, "comma-separated cell counts")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (run->parsed())
      return do_run(merge_config(run, run_cli, run_config_path), run_dt_exp,
                    t_end_override, reference_nx, !no_fields);
    return do_convergence(merge_config(conv, conv_cli, conv_config_path), conv_dt_exp,
                          grids);
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return exit_solver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
