#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "logfreeze/config.hpp"
#include "logfreeze/error.hpp"
#include "logfreeze/experiments.hpp"
#include "logfreeze/output.hpp"
#include "logfreeze/parallel.hpp"
#include "logfreeze/selfcheck.hpp"
#include "logfreeze/theory.hpp"

namespace fs = std::filesystem;
using namespace logfreeze;
using experiments::ExperimentConfig;
using experiments::RunSummary;

namespace {

const std::map<std::string, RunSummary (*)(const ExperimentConfig&)> kRunners = {
    {"freezing", experiments::run_freezing},
    {"moments", experiments::run_moments},
    {"max-dist", experiments::run_max_distribution},
    {"sojourn", experiments::run_sojourn},
    {"counting", experiments::run_counting},
    {"box-counting", experiments::run_box_counting},
    {"roughness", experiments::run_roughness},
    {"rem-covariance", experiments::run_rem_covariance},
    {"zeta-max", experiments::run_zeta_max},
    {"zeta-freezing", experiments::run_zeta_freezing},
    {"zeta-measure", experiments::run_zeta_measure},
    {"diag-corr", experiments::run_diag_corr},
};

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (int i = 0; lo + i * step <= hi + 1e-12; ++i) g.push_back(lo + i * step);
  return g;
}

double trapezoid(const std::vector<std::vector<double>>& rows, std::size_t col) {
  double s = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    s += 0.5 * (rows[i][0] - rows[i - 1][0]) * (rows[i][col] + rows[i - 1][col]);
  return s;
}

struct TheoryArgs {
  double beta = 0.5, x = 0.5, N = 50.0, L = 2 * M_PI;
};

output::Table theory_table(const std::string& name, const TheoryArgs& a) {
  output::Table t;
  char buf[160];
  if (name == "pdf-max-full-circle") {
    t.columns = {"x", "pdf", "cdf"};
    for (double x : grid(-45.0, 10.0, 0.02)) t.rows.push_back({x, theory::pdf_max_full_circle(x), theory::cdf_max_full_circle(x)});
    std::snprintf(buf, sizeof buf, "maximum law 2 e^x K0(2 e^{x/2}); trapezoid_integral=%.12g", trapezoid(t.rows, 1));
  } else if (name == "mesoscopic-g") {
    t.columns = {"y", "g", "density"};
    for (double y : grid(-12.0, 8.0, 0.05)) t.rows.push_back({y, theory::mesoscopic_g(y), theory::mesoscopic_density(y)});
    std::snprintf(buf, sizeof buf, "mesoscopic maximum, complementary cdf g(y); mean=%.12g variance=%.12g",
                  theory::mesoscopic_cumulant(1), theory::mesoscopic_cumulant(2));
  } else if (name == "freezing-curve") {
    t.columns = {"beta", "minus_F"};
    for (double b : grid(0.05, 3.0, 0.05)) t.rows.push_back({b, theory::freezing_curve(b)});
    std::snprintf(buf, sizeof buf, "limiting -F/log N: beta + 1/beta below 1, 2 above");
  } else if (name == "sojourn-density") {
    t.columns = {"xi", "density"};
    for (double xi : grid(0.02, 8.0, 0.02)) t.rows.push_back({xi, theory::density_sojourn_full_circle(xi, a.x)});
    std::snprintf(buf, sizeof buf, "sojourn measure density, full circle, x=%g; trapezoid_integral=%.10g", a.x,
                  trapezoid(t.rows, 1));
  } else if (name == "g-beta") {
    if (!(a.beta > 0.0 && a.beta <= 1.0)) throw ConfigError("g-beta: beta must lie in (0, 1]");
    t.columns = {"y", "g_beta", "g_dual_series"};
    for (double y : grid(-8.0, 4.0, 0.05))
      t.rows.push_back({y, theory::g_beta(y, a.beta), theory::g_beta_series(y, 1.0 / a.beta)});
    std::snprintf(buf, sizeof buf, "moment generating function and its dual, beta=%g", a.beta);
  } else if (name == "clm-density") {
    t.columns = {"phi", "density"};
    for (double p : grid(0.0, 2 * M_PI, M_PI / 128)) t.rows.push_back({p, theory::clm_density(p, a.beta)});
    std::snprintf(buf, sizeof buf, "position density of the minimum, beta=%g", a.beta);
  } else if (name == "mu-typical") {
    t.columns = {"x", "log_mu_typical"};
    for (double x : grid(0.05, 0.95, 0.05)) t.rows.push_back({x, theory::mu_typical(x, a.N, a.L)});
    std::snprintf(buf, sizeof buf, "typical sojourn scale, N=%g, L=%g", a.N, a.L);
  } else if (name == "z-e-scale") {
    t.columns = {"beta", "log_Z_e"};
    for (double b : grid(0.05, 0.95, 0.05)) t.rows.push_back({b, theory::z_e_scale({b, 1.0, a.N, a.L})});
    std::snprintf(buf, sizeof buf, "characteristic partition-function scale, N=%g, L=%g", a.N, a.L);
  } else {
    throw ConfigError("unknown curve '" + name +
                      "' (pdf-max-full-circle, mesoscopic-g, freezing-curve, sojourn-density, g-beta, clm-density, "
                      "mu-typical, z-e-scale)");
  }
  t.source = buf;
  return t;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + item + "' in list '" + s + "'");
    }
  }
  if (v.empty()) throw ConfigError("empty list");
  return v;
}

std::ostream* open_out(const std::string& dir, const std::string& file, std::ofstream& f) {
  if (dir.empty()) return &std::cout;
  fs::create_directories(dir);
  f.open(fs::path(dir) / file);
  if (!f) throw ConfigError("cannot write " + (fs::path(dir) / file).string());
  return &f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logfreeze: log-correlated fields, freezing and extremes of random characteristic polynomials and zeta"};
  app.require_subcommand(1);
  app.set_version_flag("--version", output::version());

  std::string out_dir, config_path;
  auto* theory_cmd = app.add_subcommand("theory", "tabulate a closed-form curve");
  std::string curve;
  TheoryArgs targs;
  theory_cmd->add_option("curve", curve, "curve name")->required();
  theory_cmd->add_option("--beta", targs.beta, "inverse temperature");
  theory_cmd->add_option("--x", targs.x, "level");
  theory_cmd->add_option("--N", targs.N, "matrix size");
  theory_cmd->add_option("--L", targs.L, "arc length");
  theory_cmd->add_option("--out", out_dir, "output directory (default stdout)");

  auto* run_cmd = app.add_subcommand("run", "run an experiment");
  std::string exp_name, ensemble, beta_grid, x_grid, q_grid;
  std::uint64_t seed = 1, prime_limit = 100000;
  int workers = 0, N = 50, ppu = 0;
  std::size_t n_samples = 0, n_grid = 0, windows = 0;
  double L = 0, beta = 0, x = 0, T = 0, W = 0;
  bool emit = false;
  run_cmd->add_option("experiment", exp_name, "experiment name")->required();
  run_cmd->add_option("--config", config_path, "JSON config file");
  run_cmd->add_option("--out", out_dir, "output directory (default: summary to stdout)");
  run_cmd->add_option("--seed", seed, "master seed");
  run_cmd->add_option("--workers", workers, "worker threads (default LOGFREEZE_WORKERS or hardware)");
  run_cmd->add_option("--ensemble", ensemble, "cue, rem or fourier");
  run_cmd->add_option("--n-samples", n_samples, "Monte Carlo samples");
  auto* oN = run_cmd->add_option("--N,--M,--K", N, "matrix size N, lattice size M or Fourier modes K");
  run_cmd->add_option("--L", L, "arc or window length");
  run_cmd->add_option("--n-grid", n_grid, "field grid points");
  run_cmd->add_option("--W", W, "lattice regularisation");
  run_cmd->add_option("--beta", beta, "single beta");
  run_cmd->add_option("--beta-grid", beta_grid, "comma-separated betas");
  run_cmd->add_option("--x", x, "single level x");
  run_cmd->add_option("--x-grid", x_grid, "comma-separated levels");
  run_cmd->add_option("--q-grid", q_grid, "comma-separated box-counting q");
  run_cmd->add_option("--T", T, "zeta height");
  run_cmd->add_option("--windows", windows, "number of zeta windows");
  run_cmd->add_option("--points-per-unit", ppu, "zeta grid density (0: 16 per zero spacing)");
  run_cmd->add_option("--prime-limit", prime_limit, "prime cutoff for diag-corr");
  run_cmd->add_flag("--emit-samples", emit, "write per-sample columns");

  auto* self_cmd = app.add_subcommand("selfcheck", "fast invariant suite");
  std::string fault;
  self_cmd->add_option("--inject-fault", fault, "test fixture: 'bessel' corrupts a stored Bessel constant")
      ->check(CLI::IsMember({"bessel"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (theory_cmd->parsed()) {
      const auto t = theory_table(curve, targs);
      std::ofstream f;
      auto* os = open_out(out_dir, "theory-" + curve + ".tsv", f);
      const std::string key = curve + " beta=" + output::fmt(targs.beta) + " x=" + output::fmt(targs.x) +
                              " N=" + output::fmt(targs.N) + " L=" + output::fmt(targs.L);
      output::write_table(*os, t, config::fnv1a64(key), 0);
      return 0;
    }
    if (self_cmd->parsed()) {
      selfcheck::Options o;
      o.corrupt_bessel_constant = fault == "bessel";
      const auto r = selfcheck::run(o);
      for (const auto& c : r)
        std::printf("%-36s %s  error=%.3g tol=%.0e\n", c.name.c_str(), c.pass ? "PASS" : "FAIL", c.error, c.tolerance);
      if (!selfcheck::all_pass(r)) {
        for (const auto& c : r)
          if (!c.pass) std::fprintf(stderr, "selfcheck failed: %s\n", c.name.c_str());
        return 1;
      }
      return 0;
    }

    auto it = kRunners.find(exp_name);
    if (it == kRunners.end()) throw ConfigError("unknown experiment '" + exp_name + "'");
    ExperimentConfig c;
    c.n_workers = default_workers();
    if (exp_name == "max-dist" || exp_name == "roughness") c.n_samples = 100000;
    if (exp_name == "roughness") c.ensemble = experiments::Ensemble::fourier, c.N = 512;
    if (exp_name == "rem-covariance") c.ensemble = experiments::Ensemble::rem, c.N = 64;
    if (exp_name == "zeta-freezing") c.beta_grid = {0.5, 0.75, 2.0};
    if (exp_name == "zeta-measure") c.x_grid = {0.4};
    if (exp_name == "diag-corr") c.x_grid = {0.01};
    if (!config_path.empty()) c = config::load_file(config_path, c);
    auto given = [&](const char* flag) { return run_cmd->count(flag) > 0; };
    if (given("--seed")) c.master_seed = seed;
    if (given("--workers")) c.n_workers = workers;
    if (given("--ensemble")) c.ensemble = experiments::ensemble_from_string(ensemble);
    if (given("--n-samples")) c.n_samples = n_samples;
    if (oN->count() > 0) c.N = N;
    if (given("--L")) c.L = L;
    if (given("--n-grid")) c.n_grid = n_grid;
    if (given("--W")) c.W = W;
    if (given("--beta")) c.beta_grid = {beta};
    if (given("--beta-grid")) c.beta_grid = parse_list(beta_grid);
    if (given("--x")) c.x_grid = {x};
    if (given("--x-grid")) c.x_grid = parse_list(x_grid);
    if (given("--q-grid")) c.q_grid = parse_list(q_grid);
    if (given("--T")) c.T = T;
    if (given("--windows")) c.windows = windows;
    if (given("--points-per-unit")) c.points_per_unit = ppu;
    if (given("--prime-limit")) c.prime_limit = prime_limit;
    if (given("--emit-samples")) c.emit_samples = emit;

    const RunSummary s = it->second(c);
    std::ofstream f;
    output::write_summary(*open_out(out_dir, exp_name + ".summary.tsv", f), s);
    if (!s.samples.empty() && !out_dir.empty()) {
      std::ofstream fs_;
      const std::string suffix = exp_name == "zeta-max" ? ".windows.tsv" : ".samples.tsv";
      output::write_samples(*open_out(out_dir, exp_name + suffix, fs_), s);
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
