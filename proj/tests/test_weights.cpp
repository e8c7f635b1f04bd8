#include "doctest.h"

#include <cmath>

#include "robineig/errors.hpp"
#include "robineig/weights.hpp"

using namespace robineig;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected robineig::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("interval validation") {
  CHECK(kind_of([] { Interval(1.0, 1.0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { Interval(2.0, 1.0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { Interval(0.0, INFINITY); }) == ErrorKind::InvalidArgument);
  const Interval i(0.25, 0.75);
  CHECK(i.length() == 0.5);
  CHECK(i.contains(0.5));
  CHECK_FALSE(i.contains(0.25));
  CHECK(Interval(0.0, 1.0).contains(i));
}

TEST_CASE("evaluate uses right limits") {
  const BangBangWeight w(Interval(0.0, 1.0), 2.0, {Interval(0.2, 0.4)});
  CHECK(w.evaluate(0.1) == -1.0);
  CHECK(w.evaluate(0.2) == 2.0);
  CHECK(w.evaluate(0.3) == 2.0);
  CHECK(w.evaluate(0.4) == -1.0);
}

TEST_CASE("segments are sorted and pieces merged") {
  const BangBangWeight w(Interval(0.0, 1.0), 1.0, {Interval(0.6, 0.8), Interval(0.0, 0.2)});
  REQUIRE(w.segments().size() == 2);
  CHECK(w.segments()[0].a == 0.0);
  const auto pieces = w.pieces();
  REQUIRE(pieces.size() == 4);
  CHECK(pieces[0].value == 1.0);
  CHECK(pieces[1].value == -1.0);
  CHECK(pieces[3].span.b == 1.0);

  const BangBangWeight touching(Interval(0.0, 1.0), 1.0, {Interval(0.1, 0.2), Interval(0.2, 0.3)});
  CHECK(touching.pieces().size() == 3);
}

TEST_CASE("invalid weights") {
  CHECK(kind_of([] { BangBangWeight(Interval(0, 1), 1.0, {Interval(0.1, 0.5), Interval(0.4, 0.6)}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { BangBangWeight(Interval(0, 1), 1.0, {Interval(0.5, 1.5)}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { BangBangWeight(Interval(0, 1), 0.0, {Interval(0.1, 0.2)}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { BangBangWeight(Interval(0, 1), 1.0, {}); }) == ErrorKind::NoSignChange);
  CHECK(kind_of([] { BangBangWeight(Interval(0, 1), 1.0, {Interval(0, 1)}); }) == ErrorKind::NoSignChange);
}

TEST_CASE("weight mean") {
  CHECK(weight_mean(BangBangWeight(Interval(0, 1), 1.0, {Interval(0, 0.25)})) == doctest::Approx(-0.5));
  CHECK(weight_mean(BangBangWeight(Interval(0, 1), 2.0, {Interval(0.3, 0.6)})) == doctest::Approx(-0.1));
  CHECK(weight_mean(BangBangWeight(Interval(0, 2), 3.0, {Interval(0, 0.5)})) == doctest::Approx(0.0));
}

TEST_CASE("admissibility") {
  const BangBangWeight w(Interval(0, 1), 1.0, {Interval(0, 0.25)});
  const auto saturated = check_admissible(w, {0.5, 1.0, 0.0});
  CHECK(saturated.admissible);
  CHECK(saturated.constraint_active);
  CHECK(saturated.mean == doctest::Approx(-0.5));

  const auto slack = check_admissible(w, {0.3, 1.0, 0.0});
  CHECK(slack.admissible);
  CHECK_FALSE(slack.constraint_active);

  CHECK_FALSE(check_admissible(BangBangWeight(Interval(0, 1), 1.0, {Interval(0, 0.3)}), {0.5, 1.0, 0.0}).admissible);

  const AdmissibilityParams p{0.2, 2.0, 0.0};
  const auto active = check_admissible(BangBangWeight(Interval(0, 1), 2.0, {Interval(0, p.volume_fraction())}), p);
  CHECK(active.admissible);
  CHECK(active.constraint_active);
  CHECK(active.mean == doctest::Approx(-0.2).epsilon(1e-14));

  const auto translated = check_admissible(BangBangWeight(Interval(0, 1), 2.0, {Interval(0.5, 0.5 + p.volume_fraction())}), p);
  CHECK(translated.admissible == active.admissible);

  const auto too_big = check_admissible(w, {0.6, 1.0, 0.0});
  CHECK_FALSE(too_big.admissible);
  CHECK_FALSE(too_big.diagnostic.empty());

  CHECK_FALSE(check_admissible(BangBangWeight(Interval(0, 1), 2.0, {Interval(0, 0.1)}), {0.5, 1.0, 0.0}).admissible);
}

TEST_CASE("admissibility parameter ranges") {
  CHECK(kind_of([] { AdmissibilityParams{1.2, 1.0, 0.0}.validate(); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { AdmissibilityParams{-0.2, 1.0, 0.0}.validate(); }) == ErrorKind::InvalidArgument);
  CHECK_NOTHROW(AdmissibilityParams{-0.2, 1.0, 1.0}.validate());
  CHECK(kind_of([] { AdmissibilityParams{-1.5, 1.0, 1.0}.validate(); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { AdmissibilityParams{0.5, 1.0, -1.0}.validate(); }) == ErrorKind::InvalidArgument);
  CHECK(AdmissibilityParams{0.5, 1.0, 0.0}.volume_fraction() == doctest::Approx(0.25));
}

TEST_CASE("translation and affine maps") {
  const BangBangWeight w(Interval(0, 1), 1.5, {Interval(0.2, 0.4)});
  const auto t = w.translated(3.0);
  CHECK(t.domain().a == 3.0);
  CHECK(t.segments()[0].a == doctest::Approx(3.2));
  const auto m = w.affinely_mapped(Interval(1.0, 3.0));
  CHECK(m.segments()[0].a == doctest::Approx(1.4));
  CHECK(m.segments()[0].b == doctest::Approx(1.8));
  CHECK(m.kappa() == 1.5);
  CHECK(m.total_length() == doctest::Approx(0.4));
}
