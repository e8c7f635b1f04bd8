#pragma once

#include <string_view>

#include "robineig/radial.hpp"
#include "robineig/weights.hpp"

namespace robineig {

enum class Regime { Supercritical, Critical, Subcritical };

std::string_view regime_name(Regime r) noexcept;

inline constexpr double kCriticalTolerance = 1e-12;

struct ThresholdReport {
  /// beta*(c, kappa) on the unit interval.
  double beta_star;
  /// Threshold for the problem at hand, in the units of its beta.
  double beta_star_scaled;
  double beta;
  Regime regime;
  double comparison_tolerance = kCriticalTolerance;
};

/// Critical Robin coefficient on (0, 1):
///   kappa > 1: 2/(c sqrt k) atan(1/sqrt k);  kappa = 1: pi/(2c);
///   kappa < 1: (atan(2 sqrt k/(k - 1)) + pi)/(c sqrt k).
/// The kappa < 1 branch adds pi outside the arctangent, which is the reading
/// continuous at kappa = 1.
double beta_star(double c, double kappa);

Regime classify(double beta, double threshold, double rel_tol = kCriticalTolerance) noexcept;

/// Threshold beta*(c, kappa)/(b - a) on a general interval.
ThresholdReport classify_1d(const Interval& domain, double beta, double c, double kappa);

/// n = 2: beta*(c', kappa)/(r1 ln(r2/r1));
/// n >= 3: (n-2) r1^{1-n} beta*(c', kappa)/(r1^{2-n} - r2^{2-n}).
ThresholdReport classify_shell(const ShellProblem& sp, double c_prime);

}  // namespace robineig
