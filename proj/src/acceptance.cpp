#include "robineig/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "robineig/errors.hpp"
#include "robineig/optimal_sets.hpp"
#include "robineig/radial.hpp"
#include "robineig/reduction.hpp"
#include "robineig/sl_core.hpp"
#include "robineig/thresholds.hpp"
#include "robineig/verifier.hpp"

namespace robineig::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

class Recorder {
 public:
  Recorder(int id, std::string name, double budget) {
    result_.id = id;
    result_.name = std::move(name);
    result_.budget_seconds = budget;
    result_.passed = true;
  }

  void check(bool ok, const std::string& what) {
    result_.details.push_back((ok ? "ok   " : "FAIL ") + what);
    if (!ok) result_.passed = false;
  }

  void note(const std::string& what) { result_.details.push_back("note " + what); }

  // Runs body, converting library errors into a failed check, then applies the time budget.
  CriterionResult finish(const std::function<void(Recorder&)>& body) {
    const auto start = Clock::now();
    try {
      body(*this);
    } catch (const Error& e) {
      check(false, std::string("raised ") + std::string(e.name()) + ": " + e.what());
    }
    result_.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    check(result_.seconds < result_.budget_seconds,
          "runtime " + fmt(result_.seconds) + " s < " + fmt(result_.budget_seconds) + " s");
    return result_;
  }

 private:
  CriterionResult result_;
};

const Interval kUnit(0.0, 1.0);

}  // namespace

CriterionResult beta_star_correctness() {
  Recorder rec(1, "beta_star", 30.0);
  return rec.finish([](Recorder& r) {
    const double bs = beta_star(0.5, 1.0);
    r.check(std::abs(bs - std::numbers::pi) <= 1e-12,
            "beta_star(0.5, 1) = pi within 1e-12 (got " + fmt(bs) + ")");
    for (const auto& [c, kappa] : {std::pair{0.5, 1.0}, {0.3, 1.0}, {0.3, 2.0}}) {
      const double expected = beta_star(c, kappa);
      const double found = find_threshold(kUnit, c, kappa, {0.5, 20.0});
      r.check(std::abs(found - expected) <= 1e-4,
              "find_threshold(c=" + fmt(c) + ", kappa=" + fmt(kappa) + ") = " + fmt(found) +
                  " vs beta_star " + fmt(expected) + " within 1e-4");
    }
  });
}

CriterionResult regime_reproduction_1d() {
  Recorder rec(2, "regimes_1d", 60.0);
  return rec.finish([](Recorder& r) {
    for (const auto& [c, kappa] : {std::pair{0.5, 1.0}, {0.3, 2.0}}) {
      const double bs = beta_star(c, kappa);
      const std::string tag = "c=" + fmt(c) + ", kappa=" + fmt(kappa);
      for (const double factor : {2.0, 0.5}) {
        const double beta = factor * bs;
        const SweepResult sweep = sweep_placements_1d(kUnit, beta, beta, c, kappa, 201);
        const OptimalSetPrediction pred = predict_1d(kUnit, beta, c, kappa);
        r.check(argmin_matches(sweep, pred),
                tag + ", beta=" + fmt(factor) + "*beta*: " + std::string(regime_name(pred.regime)) +
                    " argmin " + fmt(sweep.argmin_anchor) + " within one cell of predicted set");
      }
      const SweepResult flat = sweep_placements_1d(kUnit, bs, bs, c, kappa, 201);
      const double ratio = flat.lambda_range / flat.lambda_min;
      r.check(ratio <= 1e-7, tag + ", beta=beta*: lambda_range/lambda_min = " + fmt(ratio) +
                                 " <= 1e-7");
    }
  });
}

CriterionResult solver_cross_validation() {
  Recorder rec(3, "cross_validation", 120.0);
  return rec.finish([](Recorder& r) {
    const auto configs = random_configurations(25, kOracleSeed);
    double worst = 0.0;
    int agreeing = 0;
    for (const auto& p : configs) {
      const double exact = principal_eigenvalue(p).lambda;
      const double fd = fd_eigenvalue(p, 20000);
      const double d = rel_diff(exact, fd);
      worst = std::max(worst, d);
      if (d <= 1e-5) ++agreeing;
    }
    r.check(agreeing == 25, "transfer matrix vs finite differences: " + std::to_string(agreeing) +
                                "/25 within 1e-5 (worst " + fmt(worst) + ")");

    double worst_radial = 0.0;
    int radial_ok = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      const auto& p = configs[i];
      const double shift = 1.0 + static_cast<double>(i);
      const BangBangWeight moved = p.weight.translated(shift);
      // The radial solver carries a single beta; use the left coefficient on both sides.
      const RobinProblem1D flat(moved, p.beta_left, p.beta_left);
      const AdmissibilityParams params{0.5 * (1.0 - moved.kappa()), moved.kappa(), p.beta_left};
      std::vector<Interval> segs(moved.segments().begin(), moved.segments().end());
      const ShellProblem line(1, moved.domain().a, moved.domain().b, params, segs);
      const double d = rel_diff(principal_eigenvalue(flat).lambda,
                                radial_principal_eigenvalue(line).lambda);
      worst_radial = std::max(worst_radial, d);
      if (d <= 1e-9) ++radial_ok;
    }
    r.check(radial_ok == 5, "transfer matrix vs radial solver at n=1: " +
                                std::to_string(radial_ok) + "/5 within 1e-9 (worst " +
                                fmt(worst_radial) + ")");
  });
}

CriterionResult reduction_equivalence() {
  Recorder rec(4, "reduction", 120.0);
  return rec.finish([](Recorder& r) {
    for (const int n : {2, 3, 4}) {
      const double r1 = 1.0;
      const double r2 = 2.0;
      const AdmissibilityParams params{0.4, 2.0, 1.5};
      const double t1 = map_r_to_t(n, r1);
      const double t2 = map_r_to_t(n, r2);
      const double len = 0.3 * (t2 - t1);
      double worst = 0.0;
      int ok = 0;
      for (int k = 0; k < 5; ++k) {
        const double t0 = t1 + (t2 - t1 - len) * k / 4.0;
        const double a = k == 0 ? r1 : map_t_to_r(n, t0);
        const double b = k == 4 ? r2 : map_t_to_r(n, t0 + len);
        const ShellProblem sp(n, r1, r2, params, {Interval(a, b)});
        const ReducedProblem rp = reduce(sp);
        const double radial = radial_principal_eigenvalue(sp).lambda;
        const double reduced = reduced_exact_eigenvalue(rp).lambda / rp.lambda_factor;
        const double d = rel_diff(radial, reduced);
        worst = std::max(worst, d);
        if (d <= 1e-8) ++ok;
      }
      r.check(ok == 5, "n=" + std::to_string(n) + ": " + std::to_string(ok) +
                           "/5 placements agree within 1e-8 (worst " + fmt(worst) + ")");
    }
  });
}

namespace {

bool same_interval(const Interval& x, const Interval& y, double tol) {
  return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol;
}

}  // namespace

CriterionResult shell_structure_checks() {
  Recorder rec(5, "shell_structure", 30.0);
  return rec.finish([](Recorder& r) {
    constexpr double tol = 1e-12;
    for (const int n : {2, 3, 5}) {
      const double r1 = 1.0;
      const double r2 = n == 2 ? std::exp(1.0) : 2.0;
      const ShellProblem probe(n, r1, r2, {0.5, 1.5, 1.0}, {Interval(1.2, 1.4)});
      const ReducedProblem rp = reduce(probe);
      const double threshold = classify_shell(probe, rp.c_prime).beta_star_scaled;
      for (const double factor : {2.0, 1.0, 0.5}) {
        const ShellProblem sp(n, r1, r2, {0.5, 1.5, factor * threshold}, {Interval(1.2, 1.4)});
        const OptimalSetPrediction pred = predict_shell(sp, rp.c_prime);
        const OptimalSetPrediction in_t = pullback_to_t(pred, n);
        const OptimalSetPrediction expected = predict_interval(rp.t_domain, pred.regime, rp.c_prime,
                                                            Variable::T);
        bool ok = in_t.sets.size() == expected.sets.size() &&
                  in_t.family.has_value() == expected.family.has_value();
        const double expected_len = rp.c_prime * rp.t_domain.length();
        for (std::size_t i = 0; ok && i < in_t.sets.size(); ++i) {
          ok = same_interval(in_t.sets[i], expected.sets[i], tol) &&
               std::abs(in_t.sets[i].length() - expected_len) <= tol;
        }
        if (ok && in_t.family) {
          ok = same_interval(in_t.family->anchor_range, expected.family->anchor_range, tol) &&
               std::abs(in_t.family->length - expected_len) <= tol;
        }
        r.check(ok, "n=" + std::to_string(n) + " " + std::string(regime_name(pred.regime)) +
                        ": r-prediction pulls back to the interval prediction on Omega_t (1e-12)");
      }
    }
    double worst = 0.0;
    for (const double c : {0.2, 0.5, 0.8}) {
      const double mid = std::numbers::pi / (2.0 * c);
      worst = std::max({worst, std::abs(beta_star(c, 1.0 + 1e-8) - mid),
                        std::abs(beta_star(c, 1.0 - 1e-8) - mid)});
    }
    r.check(worst <= 1e-6, "beta_star continuous across kappa=1 (max jump " + fmt(worst) + ")");
    const double s3 = solid_angle_constant(3);
    const double s4 = solid_angle_constant(4);
    r.check(std::abs(s3 - 4.0 * std::numbers::pi) <= 1e-12, "solid_angle_constant(3) = 4 pi");
    r.check(std::abs(s4 - 2.0 * std::numbers::pi * std::numbers::pi) <= 1e-12,
            "solid_angle_constant(4) = 2 pi^2");
  });
}

CriterionResult shell_regime_fidelity() {
  Recorder rec(6, "shell_fidelity", 300.0);
  return rec.finish([](Recorder& r) {
    for (const int n : {2, 3}) {
      const double r1 = 1.0;
      const double r2 = n == 2 ? std::exp(1.0) : 2.0;
      const AdmissibilityParams base{0.5, 1.0, 1.0};
      const ShellProblem probe(n, r1, r2, base, {Interval(1.2, 1.5)});
      const ReducedProblem rp = reduce(probe);
      const double threshold = classify_shell(probe, rp.c_prime).beta_star_scaled;
      for (const double factor : {2.0, 0.5}) {
        AdmissibilityParams params = base;
        params.beta = factor * threshold;
        const ShellProblem sp = ShellProblem(n, r1, r2, params, {Interval(1.2, 1.5)});
        const SweepResult sweep = sweep_placements_radial(sp, rp.c_prime, 101);
        const OptimalSetPrediction pred = pullback_to_t(predict_shell(sp, rp.c_prime), n);
        std::string expected;
        for (const auto& s : pred.sets) expected += " " + fmt(s.a);
        const double offset_cells =
            pred.sets.empty() ? 0.0
                              : std::abs(sweep.argmin_anchor - pred.sets.front().a) / sweep.grid_spacing;
        r.check(argmin_matches(sweep, pred),
                "n=" + std::to_string(n) + ", beta=" + fmt(factor) + "*threshold (" +
                    std::string(regime_name(pred.regime)) + "): argmin t0=" +
                    fmt(sweep.argmin_anchor) + ", predicted anchor(s)" + expected + ", spacing " +
                    fmt(sweep.grid_spacing) +
                    (pred.sets.size() == 1 ? ", offset " + fmt(offset_cells) + " cells" : ""));
        if (pred.regime == Regime::Subcritical) {
          const double left = sweep.placements.front().lambda;
          const double right = sweep.placements.back().lambda;
          r.note("n=" + std::to_string(n) + " Subcritical flush gap: lambda(inner)=" + fmt(left) +
                 ", lambda(outer)=" + fmt(right) + ", relative gap " + fmt(rel_diff(left, right)));
        }
      }
    }
  });
}

CriterionResult invariant_suites() {
  Recorder rec(7, "invariants", 120.0);
  return rec.finish([](Recorder& r) {
    std::mt19937_64 rng(kOracleSeed + 7);
    std::uniform_real_distribution<double> mu_dist(-2.0, 2.0);
    std::uniform_real_distribution<double> h_dist(0.0, 1.0);
    std::uniform_real_distribution<double> lambda_dist(0.0, 2.25);
    double worst_det = 0.0;
    for (int i = 0; i < 500; ++i) {
      const Mat2 t = transfer_matrix(mu_dist(rng), h_dist(rng), lambda_dist(rng));
      worst_det = std::max(worst_det, std::abs(t.det() - 1.0));
    }
    r.check(worst_det <= 1e-12, "transfer matrix determinant = 1 (worst " + fmt(worst_det) + ")");

    const auto configs = random_configurations(25, kOracleSeed);
    int positive = 0;
    for (const auto& p : configs) {
      const EigenResult e = principal_eigenvalue(p);
      bool ok = e.zero_count == 0;
      for (const auto& s : e.samples) ok = ok && s.u > 0.0;
      if (ok) ++positive;
    }
    r.check(positive == 25, "principal eigenfunctions strictly positive: " +
                                std::to_string(positive) + "/25");

    double worst_translation = 0.0;
    double worst_scaling = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
      const auto& p = configs[i];
      const double base = principal_eigenvalue(p).lambda;
      const RobinProblem1D moved(p.weight.translated(2.5), p.beta_left, p.beta_right);
      worst_translation = std::max(worst_translation, rel_diff(base, principal_eigenvalue(moved).lambda));
      const Interval wide(-1.0, 2.0);  // length 3
      const RobinProblem1D stretched(p.weight.affinely_mapped(wide), p.beta_left / 3.0,
                                     p.beta_right / 3.0);
      worst_scaling =
          std::max(worst_scaling, rel_diff(base, 9.0 * principal_eigenvalue(stretched).lambda));
    }
    r.check(worst_translation <= 2e-12,
            "translation covariance (worst " + fmt(worst_translation) + ")");
    r.check(worst_scaling <= 1e-10,
            "scaling law lambda(0,1) = (b-a)^2 lambda(a,b) with beta scaled (worst " +
                fmt(worst_scaling) + ")");

    double worst_rayleigh = 0.0;
    for (const int n : {1, 2, 3}) {
      const ShellProblem sp(n, 1.0, 2.0, {0.5, 2.0, 0.8}, {Interval(1.3, 1.6)});
      const double lambda = radial_principal_eigenvalue(sp).lambda;
      worst_rayleigh = std::max(worst_rayleigh, rel_diff(lambda, rayleigh_quotient_radial(sp, lambda)));
    }
    r.check(worst_rayleigh <= 1e-6,
            "radial Rayleigh quotient reproduces lambda (worst " + fmt(worst_rayleigh) + ")");

    double worst_map = 0.0;
    for (const int n : {2, 3, 4, 5}) {
      for (const double radius : {0.5, 1.0, 2.0, 10.0}) {
        worst_map = std::max(worst_map, rel_diff(radius, map_t_to_r(n, map_r_to_t(n, radius))));
      }
    }
    r.check(worst_map <= 1e-14, "r -> t -> r round trips (worst " + fmt(worst_map) + ")");

    const ShellProblem sp(3, 1.0, 2.0, {0.5, 1.0, 1.0}, {Interval(1.2, 1.5)});
    RadialOptions tight;
    tight.ode.rel_tol = 0.5e-10;
    const double coarse = radial_principal_eigenvalue(sp).lambda;
    const double fine = radial_principal_eigenvalue(sp, tight).lambda;
    r.check(rel_diff(coarse, fine) < 1e-8,
            "halving the integrator tolerance moves lambda by " + fmt(rel_diff(coarse, fine)));
  });
}

std::vector<std::string> suite_names() {
  return {"beta_star",       "regimes_1d",     "cross_validation", "reduction",
          "shell_structure", "shell_fidelity", "invariants"};
}

std::vector<CriterionResult> run(const std::string& suite) {
  const std::vector<std::function<CriterionResult()>> all = {
      beta_star_correctness,   regime_reproduction_1d, solver_cross_validation,
      reduction_equivalence,   shell_structure_checks, shell_regime_fidelity,
      invariant_suites};
  const auto names = suite_names();
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (suite == "all" || suite == names[i] || suite == std::to_string(i + 1)) {
      out.push_back(all[i]());
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  return out;
}

std::string format(const CriterionResult& r, bool with_details) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << " (" << fmt(r.seconds)
     << " s / " << fmt(r.budget_seconds) << " s)\n";
  if (with_details) {
    for (const auto& d : r.details) os << "    " << d << '\n';
  }
  return os.str();
}

}  // namespace robineig::acceptance
