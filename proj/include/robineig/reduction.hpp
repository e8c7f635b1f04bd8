#pragma once

#include <optional>

#include "robineig/radial.hpp"
#include "robineig/sl_core.hpp"
#include "robineig/weights.hpp"

namespace robineig {

/// t = ln r for n = 2 and t = r^{2-n}/(2-n) for n >= 3. Both maps solve
/// r'(t) = r^{n-1} and are increasing. Throws DomainError for r <= 0 or n < 2.
double map_r_to_t(int n, double r);
/// Inverse of map_r_to_t; for n >= 3 requires t < 0.
double map_t_to_r(int n, double t);

/// Surface measure of the unit (n-1)-sphere, 2 pi^{n/2} prod_{k=1}^{n-2}
/// Gamma((k+1)/2) / Gamma(k/2 + 1).
double solid_angle_constant(int n);

/// |B_{r2}| - |B_{r1}| = pi^{n/2} (r2^n - r1^n) / Gamma(n/2 + 1).
double shell_volume(int n, double r1, double r2);

/// The one-dimensional problem in t obtained from a shell problem:
///   v'' + lambda' Mbar(t) v = 0,  v'(t1) = beta' v(t1),  v'(t2) = -beta' (r2/r1)^{n-1} v(t2),
/// with lambda' = lambda_factor * lambda and Mbar(t) = r(t)^{2n-2} m(r(t)) / lambda_factor.
struct ReducedProblem {
  int n;
  double r1;
  double r2;
  double kappa;
  Interval t_domain;
  double beta_left;
  double beta_right;
  double lambda_factor;
  double q;
  double q_lower_bound;
  /// The n >= 3 bound evaluated with (r2^2 - r1^2) in place of (r2^n - r1^n).
  double q_lower_bound_as_printed;
  double m0_prime;
  double c_prime;
  /// Bang-bang weight on t_domain with the image of E_r as favourable set.
  /// This is the member of the relaxed admissible class used for predictions.
  BangBangWeight weight_t;

  /// r(t)^{2n-2} / lambda_factor; lies in [(r1/r2)^{2n-2}, 1].
  double scale_factor(double t) const;
  /// The exact transformed weight Mbar(t).
  double exact_weight(double t) const;
  /// Equivalent problem with the exact, non-two-valued weight Mbar.
  PiecewiseSmoothProblem exact_problem() const;
  /// Same Robin data with the bang-bang relaxation in place of Mbar.
  RobinProblem1D relaxed_problem() const;
};

/// Lower bound the scaling constant q must strictly exceed.
double q_lower_bound(const ShellProblem& sp);

/// Throws DimensionError for n < 2, QTooSmall when q <= q_lower_bound, and
/// InvalidArgument when m0 <= 0 (the rescaled bound m0' must stay in (0, 1)).
/// Without q the default 2 * q_lower_bound is used.
ReducedProblem reduce(const ShellProblem& sp, std::optional<double> q = std::nullopt);

/// Principal eigenvalue of the exact reduced problem, in the t scaling (lambda').
EigenResult reduced_exact_eigenvalue(const ReducedProblem& rp, const RadialOptions& options = {});

}  // namespace robineig
