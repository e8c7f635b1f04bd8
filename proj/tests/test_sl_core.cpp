#include "doctest.h"

#include <cmath>
#include <numbers>

#include "robineig/errors.hpp"
#include "robineig/sl_core.hpp"

using namespace robineig;

namespace {

// Neumann, E = (0, 1/4), kappa = 1 on (0, 1): with s = sqrt(lambda), u = cos(s x)
// on E and cosh(s (1 - x)) outside; matching log-derivatives gives
// tan(s/4) = tanh(3s/4).
double quarter_neumann_oracle() {
  auto f = [](double s) { return std::tan(s / 4) - std::tanh(3 * s / 4); };
  double lo = 0.5;
  double hi = 2 * std::numbers::pi - 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  const double s = 0.5 * (lo + hi);
  return s * s;
}

// E = (0, l), kappa = k, Robin beta at both ends. Inside E, u = cos(w x) + (beta/w) sin(w x);
// the right piece is solved backwards from x = 1. Returns the Wronskian at x = l.
double interface_residual(double lambda, double l, double k, double beta) {
  const double w = std::sqrt(lambda * k);
  const double s = std::sqrt(lambda);
  const double u = std::cos(w * l) + beta / w * std::sin(w * l);
  const double du = -w * std::sin(w * l) + beta * std::cos(w * l);
  const double d = 1.0 - l;
  // Right solution with v'(1) = -beta v(1): v = s cosh(s(1-x)) + beta sinh(s(1-x)).
  const double v = s * std::cosh(s * d) + beta * std::sinh(s * d);
  const double dv = -(s * s * std::sinh(s * d) + beta * s * std::cosh(s * d));
  return u * dv - du * v;
}

double interface_oracle(double l, double k, double beta, double lo, double hi) {
  const double flo = interface_residual(lo, l, k, beta);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((interface_residual(mid, l, k, beta) > 0) == (flo > 0) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

RobinProblem1D problem(std::vector<Interval> sets, double kappa, double bl, double br,
                       Interval domain = Interval(0, 1)) {
  return RobinProblem1D(BangBangWeight(domain, kappa, std::move(sets)), bl, br);
}

}  // namespace

TEST_CASE("transfer matrices") {
  const Mat2 flat = transfer_matrix(1.0, 0.5, 0.0);
  CHECK(flat.m00 == 1.0);
  CHECK(flat.m01 == 0.5);
  CHECK(flat.m10 == 0.0);
  CHECK(flat.m11 == 1.0);

  const Mat2 osc = transfer_matrix(1.0, std::numbers::pi / 2, 1.0);
  CHECK(osc.m00 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(osc.m01 == doctest::Approx(1.0));
  CHECK(osc.m10 == doctest::Approx(-1.0));

  const Mat2 half = transfer_matrix(1.0, 1.0, std::numbers::pi * std::numbers::pi);
  CHECK(std::abs(half.m00 + 1.0) < 1e-12);
  CHECK(std::abs(half.m01) < 1e-12);
  CHECK(std::abs(half.m10) < 1e-12);
  CHECK(std::abs(half.m11 + 1.0) < 1e-12);

  const Mat2 unit = transfer_matrix(-1.0, 1.0, 1.0);
  CHECK(unit.m00 == doctest::Approx(std::cosh(1.0)));
  CHECK(unit.m01 == doctest::Approx(std::sinh(1.0)));
  CHECK(unit.m10 == doctest::Approx(std::sinh(1.0)));

  const Mat2 hyp = transfer_matrix(-1.0, 1.0, 4.0);
  CHECK(hyp.m00 == doctest::Approx(std::cosh(2.0)));
  CHECK(hyp.m01 == doctest::Approx(std::sinh(2.0) / 2));
  CHECK(hyp.m10 == doctest::Approx(2 * std::sinh(2.0)));

  for (double mu : {-1.0, 2.5}) {
    for (double lambda : {1e-6, 0.3, 17.0, 40.0}) {
      CHECK(transfer_matrix(mu, 0.7, lambda).det() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("shoot at lambda = 0") {
  const auto robin = shoot(problem({Interval(0.2, 0.4)}, 1.0, 1.0, 1.0), 0.0);
  CHECK(robin.residual == doctest::Approx(3.0));
  CHECK(robin.zero_count == 0);
  const auto wide = shoot(problem({Interval(0.5, 1)}, 1.0, 1.0, 1.0, Interval(0, 2)), 0.0);
  CHECK(wide.residual == doctest::Approx(4.0));
  const auto neumann = shoot(problem({Interval(0.2, 0.4)}, 1.0, 0.0, 0.0), 0.0);
  CHECK(neumann.residual == 0.0);
}

TEST_CASE("Neumann quarter interval matches the transcendental oracle") {
  const double expected = quarter_neumann_oracle();
  CHECK(expected == doctest::Approx(9.632).epsilon(1e-3));
  const auto r = principal_eigenvalue(problem({Interval(0, 0.25)}, 1.0, 0.0, 0.0));
  CHECK(r.lambda == doctest::Approx(expected).epsilon(1e-11));
  CHECK(r.zero_count == 0);
}

TEST_CASE("Robin single interface matches the transcendental oracle") {
  for (double beta : {0.5, 2.0}) {
    const auto r = principal_eigenvalue(problem({Interval(0, 0.3)}, 2.0, beta, beta));
    const double expected = interface_oracle(0.3, 2.0, beta, 0.5 * r.lambda, 1.5 * r.lambda);
    CHECK(r.lambda == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("principal eigenfunction is positive and normalized") {
  const auto r = principal_eigenvalue(problem({Interval(0.35, 0.65)}, 1.0, 1.0, 1.0));
  REQUIRE(r.samples.size() >= 512);
  double max_u = 0.0;
  for (const auto& s : r.samples) {
    CHECK(s.u > 0.0);
    max_u = std::max(max_u, std::abs(s.u));
  }
  CHECK(max_u == doctest::Approx(1.0));
  CHECK(r.samples.front().x == 0.0);
  CHECK(r.samples.back().x == 1.0);
}

TEST_CASE("reflection symmetry") {
  const auto left = principal_eigenvalue(problem({Interval(0.1, 0.3)}, 2.0, 1.0, 3.0));
  const auto right = principal_eigenvalue(problem({Interval(0.7, 0.9)}, 2.0, 3.0, 1.0));
  CHECK(left.lambda == doctest::Approx(right.lambda).epsilon(1e-11));
}

TEST_CASE("monotonicity") {
  double previous = 0.0;
  for (double beta : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    const double lambda = principal_eigenvalue(problem({Interval(0.3, 0.5)}, 1.0, beta, beta)).lambda;
    CHECK(lambda > previous);
    previous = lambda;
  }
  const double small = principal_eigenvalue(problem({Interval(0.4, 0.5)}, 1.0, 1.0, 1.0)).lambda;
  const double large = principal_eigenvalue(problem({Interval(0.35, 0.55)}, 1.0, 1.0, 1.0)).lambda;
  CHECK(large < small);
  const double weak = principal_eigenvalue(problem({Interval(0.4, 0.5)}, 1.0, 1.0, 1.0)).lambda;
  const double strong = principal_eigenvalue(problem({Interval(0.4, 0.5)}, 3.0, 1.0, 1.0)).lambda;
  CHECK(strong < weak);
}

TEST_CASE("scaling of the domain") {
  const auto unit = principal_eigenvalue(problem({Interval(0.2, 0.5)}, 1.5, 1.0, 1.0));
  const auto stretched =
      principal_eigenvalue(problem({Interval(0.6, 1.5)}, 1.5, 1.0 / 3, 1.0 / 3, Interval(0, 3)));
  CHECK(stretched.lambda * 9 == doctest::Approx(unit.lambda).epsilon(1e-10));
}

TEST_CASE("failure modes") {
  try {
    principal_eigenvalue(problem({Interval(0, 0.6)}, 1.0, 0.0, 0.0));
    FAIL("expected ConstraintViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintViolated);
  }
  CHECK_THROWS_AS(RobinProblem1D(BangBangWeight(Interval(0, 1), 1.0, {Interval(0, 0.2)}), -1.0), Error);
}
