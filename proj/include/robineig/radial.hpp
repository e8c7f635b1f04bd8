#pragma once

#include <span>
#include <vector>

#include "robineig/ode.hpp"
#include "robineig/sl_core.hpp"
#include "robineig/weights.hpp"

namespace robineig {

/// Radially symmetric problem on the shell r1 < |x| < r2 in R^n:
///   u'' + (n-1)/r u' + lambda m(r) u = 0,  u'(r1) = beta u(r1),  u'(r2) = -beta u(r2).
/// n = 1 is accepted by the radial solver (no curvature term) so it can be
/// checked against the transfer-matrix solver; the reduction requires n >= 2.
struct ShellProblem {
  int n;
  double r1;
  double r2;
  double beta;
  BangBangWeight weight_r;
  AdmissibilityParams params;

  /// Builds the weight kappa on `segments`, -1 elsewhere in (r1, r2). kappa and
  /// beta are taken from `params`.
  ShellProblem(int n, double r1, double r2, const AdmissibilityParams& params,
               std::vector<Interval> segments);

  Interval radial_domain() const { return {r1, r2}; }
  ShellProblem with_segments(std::vector<Interval> segments) const;
};

struct RadialOptions {
  SearchOptions search{};
  OdeOptions ode{};
};

struct RadialShot {
  double residual;
  int zero_count;
};

/// Integrates from r1 with (u, u') = (1, beta); residual is normalized by |(u, u')|.
RadialShot radial_shoot(const ShellProblem& sp, double lambda, const OdeOptions& options = {});

/// int_{r1}^{r2} m(r) r^{n-1} dr, exact for the piecewise-constant profile.
double radial_weighted_integral(const ShellProblem& sp);

EigenResult radial_principal_eigenvalue(const ShellProblem& sp, const RadialOptions& options = {});

/// Eigenfunction states (u, u') at the given sorted radii for a fixed lambda.
std::vector<EigenSample> radial_profile(const ShellProblem& sp, double lambda,
                                        std::span<const double> radii,
                                        const OdeOptions& options = {});

PiecewiseSmoothProblem radial_ode(const ShellProblem& sp);

}  // namespace robineig
