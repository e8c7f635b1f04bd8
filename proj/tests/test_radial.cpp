#include "doctest.h"

#include <cmath>

#include "robineig/errors.hpp"
#include "robineig/radial.hpp"
#include "robineig/sl_core.hpp"
#include "robineig/verifier.hpp"

using namespace robineig;

namespace {

ShellProblem shell(int n, double r1, double r2, double kappa, double beta, std::vector<Interval> sets,
                   double m0 = 0.5) {
  return ShellProblem(n, r1, r2, AdmissibilityParams{m0, kappa, beta}, std::move(sets));
}

}  // namespace

TEST_CASE("radial shooting at lambda = 0") {
  const auto neumann = radial_shoot(shell(3, 1, 2, 1, 0, {Interval(1.2, 1.4)}), 0.0);
  CHECK(std::abs(neumann.residual) < 1e-14);
  CHECK(neumann.zero_count == 0);

  // u = 1 + ln r, so (u, u') at r = 2 is (1 + ln 2, 1/2).
  const auto robin = radial_shoot(shell(2, 1, 2, 1, 1, {Interval(1.2, 1.4)}), 0.0);
  const double u = 1 + std::log(2.0);
  CHECK(robin.residual == doctest::Approx((0.5 + u) / std::hypot(u, 0.5)).epsilon(1e-9));
  CHECK(robin.zero_count == 0);
}

TEST_CASE("three-dimensional shell via w = r u") {
  // For n = 3, w = r u solves w'' + lambda m w = 0 with
  // w'(r1) = (beta + 1/r1) w(r1) and w'(r2) = -(beta - 1/r2) w(r2).
  const double beta = 1.0;
  const std::vector<Interval> sets{Interval(1.3, 1.6)};
  const auto radial = radial_principal_eigenvalue(shell(3, 1, 2, 1.5, beta, sets));
  const RobinProblem1D flat(BangBangWeight(Interval(1, 2), 1.5, sets), beta + 1.0, beta - 0.5);
  CHECK(radial.lambda == doctest::Approx(principal_eigenvalue(flat).lambda).epsilon(1e-8));
  CHECK(radial.zero_count == 0);
}

TEST_CASE("n = 1 agrees with the transfer-matrix solver") {
  const std::vector<Interval> sets{Interval(0.4, 0.9), Interval(1.2, 1.5)};
  const auto radial = radial_principal_eigenvalue(shell(1, 0.2, 2.0, 2.0, 0.7, sets));
  const RobinProblem1D flat(BangBangWeight(Interval(0.2, 2.0), 2.0, sets), 0.7);
  CHECK(radial.lambda == doctest::Approx(principal_eigenvalue(flat).lambda).epsilon(1e-9));
}

TEST_CASE("no reflection symmetry on shells") {
  const auto inner = radial_principal_eigenvalue(shell(3, 1, 2, 1, 0.1, {Interval(1, 1.25)}));
  const auto outer = radial_principal_eigenvalue(shell(3, 1, 2, 1, 0.1, {Interval(1.75, 2)}));
  CHECK(std::abs(inner.lambda - outer.lambda) > 1e-3 * inner.lambda);
}

TEST_CASE("weighted integral") {
  const auto sp = shell(3, 1, 2, 2, 0, {Interval(1, 1.5)});
  const double expected = 2 * (std::pow(1.5, 3) - 1) / 3 - (8 - std::pow(1.5, 3)) / 3;
  CHECK(radial_weighted_integral(sp) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("Neumann shell needs a negative weighted integral") {
  try {
    radial_principal_eigenvalue(shell(2, 1, 2, 3, 0, {Interval(1.2, 1.8)}));
    FAIL("expected ConstraintViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintViolated);
  }
}

TEST_CASE("eigenfunction and Rayleigh quotient") {
  for (int n : {2, 3}) {
    const auto sp = shell(n, 1, 2, 1, 0.5, {Interval(1.3, 1.5)});
    const auto r = radial_principal_eigenvalue(sp);
    for (const auto& s : r.samples) CHECK(s.u > 0.0);
    CHECK(rayleigh_quotient_radial(sp, r.lambda) == doctest::Approx(r.lambda).epsilon(1e-6));
  }
}

TEST_CASE("invalid shells") {
  CHECK_THROWS_AS(shell(0, 1, 2, 1, 0, {Interval(1.2, 1.4)}), Error);
  CHECK_THROWS_AS(shell(2, 0, 2, 1, 0, {Interval(1.2, 1.4)}), Error);
}
