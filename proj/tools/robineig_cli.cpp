// robineig: principal eigenvalues, thresholds and optimal placements for
// indefinite-weight Robin problems on intervals and spherical shells.
//
// Exit codes: 0 success, 1 usage, 2 computational failure, 3 verification failure.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "robineig/acceptance.hpp"
#include "robineig/errors.hpp"
#include "robineig/optimal_sets.hpp"
#include "robineig/radial.hpp"
#include "robineig/reduction.hpp"
#include "robineig/serialize.hpp"
#include "robineig/sl_core.hpp"
#include "robineig/thresholds.hpp"
#include "robineig/verifier.hpp"

#ifndef ROBINEIG_VERSION
#define ROBINEIG_VERSION "dev"
#endif

namespace fs = std::filesystem;
using namespace robineig;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCompute = 2;
constexpr int kExitVerify = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Collects outputs of one command and writes manifest.json next to them.
class Run {
 public:
  Run(std::string command, fs::path out_dir) : command_(std::move(command)), dir_(std::move(out_dir)) {}

  void param(const std::string& key, const std::string& value) { params_[key] = value; }
  template <typename T>
  void param(const std::string& key, const T& value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    params_[key] = os.str();
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  void write(const std::string& name, const std::string& content) {
    fs::create_directories(dir_);
    const fs::path p = path(name);
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << content;
    outputs_.push_back(p.string());
  }

  void finish() {
    Json params = Json::object();
    for (const auto& [k, v] : params_) params[k] = v;
    Json manifest{{"command", command_},
                  {"parameters", params},
                  {"tool_version", ROBINEIG_VERSION},
                  {"timestamp", utc_timestamp()},
                  {"outputs", outputs_}};
    fs::create_directories(dir_);
    std::ofstream(path("manifest.json"), std::ios::binary) << manifest.dump(2) << '\n';
  }

 private:
  std::string command_;
  fs::path dir_;
  std::map<std::string, std::string> params_;
  std::vector<std::string> outputs_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct GeometryFlags {
  std::vector<double> domain;
  std::vector<double> shell;
  double kappa = 0.0;
  double beta = 0.0;
  std::optional<double> beta_right;
  double m0 = 0.5;
  std::optional<double> q;
  std::vector<std::vector<double>> sets;
  std::string out = "out";
};

void add_geometry(CLI::App* cmd, GeometryFlags& g, bool with_sets) {
  auto* dom = cmd->add_option("--domain", g.domain, "1D domain endpoints a b")->expected(2);
  auto* sh = cmd->add_option("--shell", g.shell, "shell dimension and radii: n r1 r2")->expected(3);
  dom->excludes(sh);
  cmd->add_option("--kappa", g.kappa, "upper weight value")->required();
  cmd->add_option("--beta", g.beta, "Robin coefficient (left end in 1D)");
  cmd->add_option("--beta-right", g.beta_right, "right Robin coefficient (1D only)");
  cmd->add_option("--m0", g.m0, "mean-weight bound m0 (shells)");
  cmd->add_option("--q", g.q, "reduction scaling constant (default: twice its lower bound)");
  if (with_sets) {
    cmd->add_option("--set", g.sets, "favourable interval s e (repeatable)")->expected(2);
  }
  cmd->add_option("--out", g.out, "output directory");
}

void record_geometry(Run& run, const GeometryFlags& g) {
  if (!g.domain.empty()) {
    run.param("domain.a", g.domain[0]);
    run.param("domain.b", g.domain[1]);
  }
  if (!g.shell.empty()) {
    run.param("shell.n", g.shell[0]);
    run.param("shell.r1", g.shell[1]);
    run.param("shell.r2", g.shell[2]);
  }
  run.param("kappa", g.kappa);
  run.param("beta", g.beta);
  if (g.beta_right) run.param("beta_right", *g.beta_right);
  run.param("m0", g.m0);
  if (g.q) run.param("q", *g.q);
  for (std::size_t i = 0; i < g.sets.size(); ++i) {
    std::ostringstream os;
    os.precision(17);
    os << g.sets[i][0] << ' ' << g.sets[i][1];
    run.param("set" + std::to_string(i), os.str());
  }
}

std::vector<Interval> parse_sets(const GeometryFlags& g) {
  std::vector<Interval> out;
  for (const auto& s : g.sets) out.emplace_back(s[0], s[1]);
  return out;
}

ShellProblem make_shell(const GeometryFlags& g, std::vector<Interval> sets) {
  const double n_real = g.shell[0];
  const int n = static_cast<int>(n_real);
  if (n != n_real) throw UsageError("shell dimension must be an integer");
  return ShellProblem(n, g.shell[1], g.shell[2], AdmissibilityParams{g.m0, g.kappa, g.beta},
                      std::move(sets));
}

void require_geometry(const GeometryFlags& g) {
  if (g.domain.empty() && g.shell.empty()) throw UsageError("one of --domain or --shell is required");
}

// Any single-interval stand-in for the weight when only the geometry matters.
ShellProblem shell_geometry(const GeometryFlags& g) {
  const double r1 = g.shell[1];
  const double r2 = g.shell[2];
  return make_shell(g, {Interval(r1 + 0.25 * (r2 - r1), r1 + 0.5 * (r2 - r1))});
}

int cmd_eigen(const GeometryFlags& g) {
  require_geometry(g);
  if (g.sets.empty()) throw UsageError("at least one --set s e is required");
  Run run("eigen", g.out);
  record_geometry(run, g);
  EigenResult result;
  Json problem;
  if (!g.domain.empty()) {
    const BangBangWeight w(Interval(g.domain[0], g.domain[1]), g.kappa, parse_sets(g));
    const RobinProblem1D p(w, g.beta, g.beta_right.value_or(g.beta));
    result = principal_eigenvalue(p);
    problem = Json{{"kind", "interval"},
                   {"weight", to_json(w)},
                   {"beta_left", p.beta_left},
                   {"beta_right", p.beta_right}};
  } else {
    if (g.beta_right) throw UsageError("--beta-right applies to --domain problems only");
    const ShellProblem sp = make_shell(g, parse_sets(g));
    result = radial_principal_eigenvalue(sp);
    problem = Json{{"kind", "shell"}, {"n", sp.n}, {"weight_r", to_json(sp.weight_r)}, {"beta", sp.beta}};
  }
  const Json out{{"command", "eigen"}, {"problem", problem}, {"result", to_json(result)}};
  std::ostringstream csv;
  write_eigenfunction_csv(csv, result);
  run.write("eigen.json", dump(out));
  run.write("eigenfunction.csv", csv.str());
  run.finish();
  std::cout << dump(out);
  return 0;
}

struct ThresholdFlags {
  double c = 0.0;
  double kappa = 0.0;
  std::vector<double> domain;
  std::optional<double> beta;
  std::string out = "out";
};

int cmd_threshold(const ThresholdFlags& f) {
  Run run("threshold", f.out);
  run.param("c", f.c);
  run.param("kappa", f.kappa);
  const Interval domain = f.domain.empty() ? Interval(0.0, 1.0) : Interval(f.domain[0], f.domain[1]);
  run.param("domain.a", domain.a);
  run.param("domain.b", domain.b);
  Json out{{"command", "threshold"}, {"c", f.c}, {"kappa", f.kappa}, {"domain", to_json(domain)}};
  if (f.beta) {
    run.param("beta", *f.beta);
    out["report"] = to_json(classify_1d(domain, *f.beta, f.c, f.kappa));
    out["prediction"] = to_json(predict_1d(domain, *f.beta, f.c, f.kappa));
  } else {
    const double bs = beta_star(f.c, f.kappa);
    out["report"] = Json{{"beta_star", bs}, {"beta_star_scaled", bs / domain.length()}};
  }
  if (f.kappa < 1.0) {
    out["note"] = "kappa < 1 branch evaluated as (atan(2 sqrt(kappa)/(kappa-1)) + pi)/(c sqrt(kappa)), "
                  "the reading continuous at kappa = 1";
  }
  run.write("threshold.json", dump(out));
  run.finish();
  std::cout << dump(out);
  return 0;
}

struct SweepFlags {
  GeometryFlags geo;
  std::optional<double> c;
  int grid = 101;
  bool raw_r = false;
};

int cmd_sweep(const SweepFlags& f) {
  const GeometryFlags& g = f.geo;
  require_geometry(g);
  if (f.grid < 3) throw UsageError("--grid must be at least 3");
  Run run("sweep", g.out);
  record_geometry(run, g);
  run.param("grid", f.grid);
  SweepResult sweep;
  OptimalSetPrediction pred;
  Json out{{"command", "sweep"}};
  if (!g.domain.empty()) {
    if (!f.c) throw UsageError("--c is required for interval sweeps");
    run.param("c", *f.c);
    const Interval domain(g.domain[0], g.domain[1]);
    const double right = g.beta_right.value_or(g.beta);
    sweep = sweep_placements_1d(domain, g.beta, right, *f.c, g.kappa, f.grid);
    pred = predict_1d(domain, g.beta, *f.c, g.kappa);
    out["c"] = *f.c;
    if (right != g.beta) out["note"] = "asymmetric Robin coefficients; prediction assumes beta_left";
  } else {
    const ShellProblem geom = shell_geometry(g);
    const ReducedProblem rp = reduce(geom, g.q);
    const double c = f.c.value_or(rp.c_prime);
    run.param("c", c);
    run.param("raw_r", f.raw_r ? "true" : "false");
    sweep = sweep_placements_radial(geom, c, f.grid, f.raw_r ? SweepLength::FixedR : SweepLength::FixedT);
    pred = predict_shell(geom, rp.c_prime);
    if (!f.raw_r) pred = pullback_to_t(pred, geom.n);
    out["c"] = c;
    out["reduced"] = to_json(rp);
    if (f.raw_r) out["label"] = "raw r-length sweep (exploratory)";
  }
  out["sweep"] = to_json(sweep);
  out["prediction"] = to_json(pred);
  out["argmin_matches_prediction"] = argmin_matches(sweep, pred);
  std::ostringstream csv;
  write_sweep_csv(csv, sweep);
  run.write("sweep.csv", csv.str());
  run.write("sweep.json", dump(out));
  run.finish();
  std::cout << dump(out);
  return 0;
}

struct ShellFlags {
  GeometryFlags geo;
  bool check = false;
  int grid = 101;
};

int cmd_shell(const ShellFlags& f) {
  const GeometryFlags& g = f.geo;
  if (g.shell.empty()) throw UsageError("--shell n r1 r2 is required");
  Run run("shell", g.out);
  record_geometry(run, g);
  const ShellProblem geom = shell_geometry(g);
  const ReducedProblem rp = reduce(geom, g.q);
  const ThresholdReport report = classify_shell(geom, rp.c_prime);
  const OptimalSetPrediction pred = predict_shell(geom, rp.c_prime);
  Json reduced = to_json(rp);
  reduced.erase("weight_t");
  Json out{{"command", "shell"},
           {"q", rp.q},
           {"m0_prime", rp.m0_prime},
           {"c_prime", rp.c_prime},
           {"threshold", to_json(report)},
           {"prediction", to_json(pred)},
           {"prediction_t", to_json(pullback_to_t(pred, geom.n))},
           {"reduced", reduced}};
  if (geom.n >= 3) {
    out["volume_note"] =
        "q bound uses |Omega| = pi^{n/2}(r2^n - r1^n)/Gamma(n/2+1); "
        "q_lower_bound_with_r2_squared_volume shows the (r2^2 - r1^2) variant";
  }
  std::ostringstream pcsv;
  write_prediction_csv(pcsv, pred);
  run.write("prediction.csv", pcsv.str());
  if (f.check) {
    run.param("grid", f.grid);
    const SweepResult sweep = sweep_placements_radial(geom, rp.c_prime, f.grid);
    const OptimalSetPrediction in_t = pullback_to_t(pred, geom.n);
    Json check{{"sweep", to_json(sweep)}, {"argmin_matches_prediction", argmin_matches(sweep, in_t)}};
    if (pred.regime == Regime::Subcritical) {
      check["lambda_inner_flush"] = sweep.placements.front().lambda;
      check["lambda_outer_flush"] = sweep.placements.back().lambda;
    }
    out["check"] = check;
    std::ostringstream scsv;
    write_sweep_csv(scsv, sweep);
    run.write("sweep.csv", scsv.str());
  }
  run.write("shell.json", dump(out));
  run.finish();
  std::cout << dump(out);
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& out_dir) {
  Run run("verify", out_dir);
  run.param("suite", suite);
  const auto results = acceptance::run(suite);
  Json summary = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    std::cout << acceptance::format(r) << std::flush;
    summary.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", r.details}});
    ok = ok && r.passed;
  }
  // Runtimes are left out so repeated runs produce identical JSON.
  run.write("verify.json", dump(Json{{"command", "verify"}, {"suite", suite}, {"all_passed", ok}, {"criteria", summary}}));
  run.finish();
  return ok ? 0 : kExitVerify;
}

int cmd_plot(const std::string& in, const std::string& out, const std::string& kind) {
  std::ifstream f(in);
  if (!f) throw UsageError("cannot read " + in);
  const CsvSeries series = read_two_column_csv(f);
  const std::string title = kind == "sweep" ? "Principal eigenvalue over placements" : "Principal eigenfunction";
  const fs::path target(out);
  Run run("plot", target.has_parent_path() ? target.parent_path() : fs::path("."));
  run.param("in", in);
  run.param("out", out);
  run.param("kind", kind);
  run.write(target.filename().string(), render_line_chart(series, title));
  run.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal eigenvalues and optimal bang-bang weights for Robin problems"};
  app.set_version_flag("--version", ROBINEIG_VERSION);
  app.require_subcommand(1);

  GeometryFlags eigen_flags;
  auto* eigen = app.add_subcommand("eigen", "principal eigenvalue of an interval or shell problem");
  add_geometry(eigen, eigen_flags, true);

  ThresholdFlags threshold_flags;
  auto* threshold = app.add_subcommand("threshold", "critical Robin coefficient beta*(c, kappa)");
  threshold->add_option("--c", threshold_flags.c, "volume fraction")->required();
  threshold->add_option("--kappa", threshold_flags.kappa, "upper weight value")->required();
  threshold->add_option("--domain", threshold_flags.domain, "interval a b")->expected(2);
  threshold->add_option("--beta", threshold_flags.beta, "classify this Robin coefficient");
  threshold->add_option("--out", threshold_flags.out, "output directory");

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "brute-force placement sweep");
  add_geometry(sweep, sweep_flags.geo, false);
  sweep->add_option("--c", sweep_flags.c, "volume fraction (shells: default c')");
  sweep->add_option("--grid", sweep_flags.grid, "number of placements");
  sweep->add_flag("--raw-r", sweep_flags.raw_r, "shells: fix the r-length instead of the t-length");

  ShellFlags shell_flags;
  auto* shell = app.add_subcommand("shell", "reduction, threshold and predicted optimal sets for a shell");
  add_geometry(shell, shell_flags.geo, false);
  shell->add_flag("--check", shell_flags.check, "compare with a radial placement sweep");
  shell->add_option("--grid", shell_flags.grid, "sweep size for --check");

  std::string suite = "all";
  std::string verify_out = "out";
  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--suite", suite, "all, a suite name, or a criterion number");
  verify->add_option("--out", verify_out, "output directory");

  std::string plot_in;
  std::string plot_out;
  std::string plot_kind = "sweep";
  auto* plot = app.add_subcommand("plot", "render a two-column CSV as an SVG line chart");
  plot->add_option("--in", plot_in, "input CSV")->required();
  plot->add_option("--out", plot_out, "output SVG")->required();
  plot->add_option("--kind", plot_kind, "sweep or eigenfunction")
      ->check(CLI::IsMember({"sweep", "eigenfunction"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eigen) return cmd_eigen(eigen_flags);
    if (*threshold) return cmd_threshold(threshold_flags);
    if (*sweep) return cmd_sweep(sweep_flags);
    if (*shell) return cmd_shell(shell_flags);
    if (*verify) return cmd_verify(suite, verify_out);
    if (*plot) return cmd_plot(plot_in, plot_out, plot_kind);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    const bool usage = e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::DimensionError ||
                       e.kind() == ErrorKind::QTooSmall;
    return usage ? kExitUsage : kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitUsage;
}
