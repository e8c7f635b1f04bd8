#include "doctest.h"

#include <cmath>
#include <numbers>

#include "robineig/radial.hpp"
#include "robineig/reduction.hpp"
#include "robineig/thresholds.hpp"

using namespace robineig;
using std::numbers::e;
using std::numbers::pi;

TEST_CASE("closed-form thresholds") {
  CHECK(beta_star(0.5, 1.0) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(beta_star(0.3, 4.0) == doctest::Approx(2 / (0.3 * 2) * std::atan(0.5)).epsilon(1e-15));
  CHECK(beta_star(0.3, 4.0) == doctest::Approx(1.545493).epsilon(1e-6));
  const double k = 0.25;
  CHECK(beta_star(0.4, k) ==
        doctest::Approx((std::atan(2 * std::sqrt(k) / (k - 1)) + pi) / (0.4 * std::sqrt(k))));
  CHECK_THROWS(beta_star(0.0, 1.0));
  CHECK_THROWS(beta_star(0.5, -1.0));
}

TEST_CASE("continuity across kappa = 1") {
  for (double c : {0.2, 0.4, 0.5, 0.8}) {
    const double middle = pi / (2 * c);
    CHECK(std::abs(beta_star(c, 1 + 1e-8) - middle) <= 1e-6);
    CHECK(std::abs(beta_star(c, 1 - 1e-8) - middle) <= 1e-6);
  }
}

TEST_CASE("threshold decreases with c") {
  for (int j = 0; j < 20; ++j) {
    const double kappa = 0.2 + 4.8 * j / 19;
    double previous = INFINITY;
    for (int i = 0; i < 20; ++i) {
      const double c = 0.05 + 0.9 * i / 19;
      const double b = beta_star(c, kappa);
      CHECK(b > 0.0);
      CHECK(b < previous);
      previous = b;
    }
  }
}

TEST_CASE("interval classification") {
  CHECK(classify_1d(Interval(0, 1), 4.0, 0.5, 1.0).regime == Regime::Supercritical);
  const auto critical = classify_1d(Interval(0, 2), pi / 2, 0.5, 1.0);
  CHECK(critical.regime == Regime::Critical);
  CHECK(critical.beta_star_scaled == doctest::Approx(pi / 2));
  CHECK(classify_1d(Interval(0, 1), 0.0, 0.3, 2.0).regime == Regime::Subcritical);
  CHECK(classify(1.0, 1.0 + 1e-13) == Regime::Critical);
  CHECK(classify(1.0, 1.0 + 1e-9) == Regime::Subcritical);
  CHECK(regime_name(Regime::Supercritical) == "Supercritical");
}

TEST_CASE("shell classification") {
  const ShellProblem two(2, 1, e, AdmissibilityParams{0.5, 1.0, 1.0}, {Interval(1.2, 1.5)});
  CHECK(classify_shell(two, 0.5).beta_star_scaled == doctest::Approx(pi));
  const ShellProblem three(3, 1, 2, AdmissibilityParams{0.5, 1.0, 7.0}, {Interval(1.2, 1.5)});
  const auto report = classify_shell(three, 0.5);
  CHECK(report.beta_star_scaled == doctest::Approx(2 * pi));
  CHECK(report.regime == Regime::Supercritical);
  const ShellProblem neumann(3, 1, 2, AdmissibilityParams{0.5, 1.0, 0.0}, {Interval(1.2, 1.5)});
  CHECK(classify_shell(neumann, 0.5).regime == Regime::Subcritical);
}

TEST_CASE("two-dimensional shell threshold is the reduced interval threshold over r1") {
  for (double r1 : {0.5, 1.0, 3.0}) {
    const ShellProblem sp(2, r1, 2 * r1, AdmissibilityParams{0.5, 2.0, 1.0}, {Interval(1.2 * r1, 1.5 * r1)});
    const auto rp = reduce(sp);
    const auto shell_report = classify_shell(sp, rp.c_prime);
    const auto reduced = classify_1d(rp.t_domain, rp.beta_left, rp.c_prime, rp.kappa);
    CHECK(shell_report.beta_star_scaled == doctest::Approx(reduced.beta_star_scaled / r1).epsilon(1e-14));
  }
}
