#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "robineig/optimal_sets.hpp"
#include "robineig/radial.hpp"
#include "robineig/reduction.hpp"
#include "robineig/sl_core.hpp"

namespace robineig {

struct Placement {
  double anchor;
  double lambda;
};

struct SweepResult {
  std::vector<Placement> placements;
  double argmin_anchor = 0.0;
  double lambda_min = 0.0;
  /// max - min of lambda over the sweep.
  double lambda_range = 0.0;
  double grid_spacing = 0.0;
  double set_length = 0.0;
  Variable anchor_variable = Variable::X;
  /// True when the radial sweep held the r-length fixed instead of the t-length.
  bool raw_r_length = false;
};

/// Evaluates fn(0..count-1) on a small thread pool; results are assembled in
/// index order, so output does not depend on scheduling.
std::vector<double> parallel_evaluate(std::size_t count, const std::function<double(std::size_t)>& fn);

/// lambda for E = (s, s + c(b - a)) at every anchor s of a uniform grid on [a, b - c(b - a)].
SweepResult sweep_placements_1d(const Interval& domain, double beta_left, double beta_right,
                                double c, double kappa, int grid_points);

enum class SweepLength { FixedT, FixedR };

/// Anchors t0 on a uniform grid of [t1, t2 - c|Omega_t|]; each E_t = (t0, t0 + c|Omega_t|)
/// is mapped back to r and solved with the radial solver. FixedR instead uses
/// r-anchors and r-length c (r2 - r1), labelled as such.
SweepResult sweep_placements_radial(const ShellProblem& sp, double c_weighted, int grid_points,
                                    SweepLength mode = SweepLength::FixedT,
                                    const RadialOptions& options = {});

/// Root of beta -> lambda(left-flush) - lambda(centred) by bisection to 1e-6 in beta.
double find_threshold(const Interval& domain, double c, double kappa,
                      std::pair<double, double> beta_bracket);

/// Smallest positive eigenvalue of the lumped finite-difference Rayleigh
/// pencil on `nodes` uniform nodes (Sturm-count bisection, then shifted
/// inverse iteration). No extrapolation.
double fd_eigenvalue_single(const RobinProblem1D& problem, int nodes);

/// Richardson extrapolation of fd_eigenvalue_single over h and h/2
/// (nodes and 2 nodes - 1 points).
double fd_eigenvalue(const RobinProblem1D& problem, int nodes);

/// Fixed-seed single-interval configurations on (0, 1) with random c, kappa,
/// Robin coefficients and placement.
std::vector<RobinProblem1D> random_configurations(std::size_t count, std::uint64_t seed);

inline constexpr std::uint64_t kOracleSeed = 20240517;

/// Rayleigh quotient of the radial eigenfunction at `lambda`, with composite
/// Simpson quadrature on each constant piece (points_per_piece made odd).
double rayleigh_quotient_radial(const ShellProblem& sp, double lambda, int points_per_piece = 1001,
                                const OdeOptions& options = {});

/// True if `anchor` is within `cells` grid spacings of the predicted family,
/// where `prediction` is expressed in the sweep's anchor variable.
bool argmin_matches(const SweepResult& sweep, const OptimalSetPrediction& prediction,
                    double cells = 1.0);

}  // namespace robineig
