#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "robineig/root_search.hpp"
#include "robineig/sl_core.hpp"
#include "robineig/weights.hpp"

namespace robineig {

/// A piece on which the weight is level * factor(x) with factor smooth.
struct SmoothPiece {
  Interval span;
  double level;
};

/// u'' + drift(x) u' + lambda level_k factor(x) u = 0 on the union of pieces,
/// with u'(a) = beta_left u(a) and u'(b) = -beta_right u(b). Piece boundaries
/// are forced step points, so coefficients only need to be smooth per piece.
struct PiecewiseSmoothProblem {
  std::vector<SmoothPiece> pieces;
  std::function<double(double)> drift;   // empty means 0
  std::function<double(double)> factor;  // empty means 1
  double beta_left = 0.0;
  double beta_right = 0.0;

  Interval domain() const { return {pieces.front().span.a, pieces.back().span.b}; }
};

struct OdeOptions {
  /// Relative local error bound of the Dormand-Prince 5(4) pair.
  double rel_tol = 1e-10;
  std::size_t max_steps = 5'000'000;
};

struct OdeShot {
  double residual;
  int zero_count;
  double u;
  double du;
  double log_scale;
  std::size_t steps;

  double normalized_residual() const noexcept;
};

/// Throws StepFailure when the step size underflows or the step budget runs out.
OdeShot shoot_ode(const PiecewiseSmoothProblem& problem, double lambda, const OdeOptions& options);

/// States at the sorted abscissae `xs` (each inside the domain), scaled so that
/// max |u| = 1.
std::vector<EigenSample> sample_ode(const PiecewiseSmoothProblem& problem, double lambda,
                                    std::span<const double> xs, const OdeOptions& options);

/// Principal root of the shooting residual above `floor` plus eigenfunction
/// samples on the standard grid.
EigenResult principal_eigenvalue_ode(const PiecewiseSmoothProblem& problem, double floor,
                                     const OdeOptions& ode, const SearchOptions& search);

PiecewiseSmoothProblem piecewise_from_weight(const BangBangWeight& weight);

}  // namespace robineig
