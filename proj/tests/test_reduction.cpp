#include "doctest.h"

#include <cmath>
#include <numbers>

#include "robineig/errors.hpp"
#include "robineig/radial.hpp"
#include "robineig/reduction.hpp"

using namespace robineig;
using std::numbers::e;
using std::numbers::pi;

namespace {

ShellProblem shell(int n, double r1, double r2, double beta, std::vector<Interval> sets,
                   double m0 = 0.5, double kappa = 1.0) {
  return ShellProblem(n, r1, r2, AdmissibilityParams{m0, kappa, beta}, std::move(sets));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected robineig::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("change of variables") {
  CHECK(map_r_to_t(2, 1.0) == 0.0);
  CHECK(map_r_to_t(3, 1.0) == -1.0);
  CHECK(map_r_to_t(4, 2.0) == doctest::Approx(-0.125));
  for (int n : {2, 3, 4, 5}) {
    for (double r : {0.5, 1.0, 2.0, 10.0}) {
      CHECK(std::abs(map_t_to_r(n, map_r_to_t(n, r)) - r) <= 1e-14 * r);
    }
  }
  CHECK(kind_of([] { map_r_to_t(2, 0.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { map_t_to_r(3, 0.5); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { map_r_to_t(1, 1.0); }) == ErrorKind::DimensionError);
}

TEST_CASE("solid angles") {
  CHECK(solid_angle_constant(2) == doctest::Approx(2 * pi).epsilon(1e-14));
  CHECK(solid_angle_constant(3) == doctest::Approx(4 * pi).epsilon(1e-14));
  CHECK(solid_angle_constant(4) == doctest::Approx(2 * pi * pi).epsilon(1e-14));
  // Unit 4-sphere: 8 pi^2 / 3.
  CHECK(solid_angle_constant(5) == doctest::Approx(8 * pi * pi / 3).epsilon(1e-14));
  CHECK(shell_volume(3, 1, 2) == doctest::Approx(4 * pi * 7 / 3));
}

TEST_CASE("two-dimensional reduction") {
  const auto rp = reduce(shell(2, 1, e, 2.0, {Interval(1.5, 2.0)}));
  CHECK(rp.t_domain.a == 0.0);
  CHECK(rp.t_domain.b == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rp.beta_left == 2.0);
  CHECK(rp.beta_right == doctest::Approx(2 * e));
  CHECK(rp.lambda_factor == doctest::Approx(e * e));
  CHECK(rp.q == doctest::Approx(0.5));
  const double m0_prime = 0.5 * (e * e - 1) / (2 * 0.5 * e * e * 1.0);
  CHECK(rp.m0_prime == doctest::Approx(m0_prime).epsilon(1e-14));
  CHECK(rp.m0_prime == doctest::Approx(0.4323).epsilon(1e-4));
  CHECK(rp.c_prime == doctest::Approx((1 - m0_prime) / 2));
  REQUIRE(rp.weight_t.segments().size() == 1);
  CHECK(rp.weight_t.segments()[0].a == doctest::Approx(std::log(1.5)));
  CHECK(rp.weight_t.segments()[0].b == doctest::Approx(std::log(2.0)));
}

TEST_CASE("three-dimensional reduction") {
  const auto rp = reduce(shell(3, 1, 2, 1.0, {Interval(1.2, 1.5)}));
  CHECK(rp.t_domain.a == -1.0);
  CHECK(rp.t_domain.b == -0.5);
  CHECK(rp.beta_left == 1.0);
  CHECK(rp.beta_right == doctest::Approx(4.0));
  CHECK(rp.lambda_factor == doctest::Approx(16.0));
  CHECK(rp.m0_prime == doctest::Approx(0.5 / rp.q));
  CHECK(rp.weight_t.segments()[0].b - rp.weight_t.segments()[0].a ==
        doctest::Approx(-1 / 1.5 + 1 / 1.2));
}

TEST_CASE("q must exceed its lower bound") {
  const auto sp = shell(2, 1, e, 1.0, {Interval(1.5, 2.0)});
  CHECK(q_lower_bound(sp) == doctest::Approx(0.25));
  CHECK(kind_of([&] { reduce(sp, 0.25); }) == ErrorKind::QTooSmall);
  CHECK(kind_of([&] { reduce(sp, 0.1); }) == ErrorKind::QTooSmall);
  CHECK_NOTHROW(reduce(sp, 0.3));
  CHECK(kind_of([] { reduce(shell(2, 1, 2, 1.0, {Interval(1.2, 1.4)}, -0.2)); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { reduce(shell(1, 1, 2, 1.0, {Interval(1.2, 1.4)})); }) == ErrorKind::DimensionError);
}

TEST_CASE("scale factor is increasing and bounded") {
  for (int n : {2, 3, 5}) {
    const auto rp = reduce(shell(n, 1, 2, 1.0, {Interval(1.2, 1.4)}));
    double previous = 0.0;
    for (int i = 0; i <= 50; ++i) {
      const double t = rp.t_domain.a + rp.t_domain.length() * i / 50.0;
      const double g = rp.scale_factor(t);
      CHECK(g > previous);
      previous = g;
    }
    CHECK(rp.scale_factor(rp.t_domain.a) == doctest::Approx(std::pow(0.5, 2 * n - 2)));
    CHECK(rp.scale_factor(rp.t_domain.b) == doctest::Approx(1.0));
  }
}

TEST_CASE("reduced problem reproduces the radial eigenvalue") {
  for (int n : {2, 3, 4}) {
    for (double beta : {0.3, 1.5}) {
      const auto sp = shell(n, 1, 2, beta, {Interval(1.3, 1.6)}, 0.4, 2.0);
      const auto rp = reduce(sp);
      const double radial = radial_principal_eigenvalue(sp).lambda;
      const double reduced = reduced_exact_eigenvalue(rp).lambda / rp.lambda_factor;
      CHECK(reduced == doctest::Approx(radial).epsilon(1e-8));
    }
  }
}
