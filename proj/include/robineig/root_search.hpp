#pragma once

#include <cstddef>
#include <functional>

namespace robineig {

/// Controls for the principal-root search shared by every shooting solver.
struct SearchOptions {
  double lambda_start = 1e-6;
  double lambda_cap = 1e8;
  double step_factor = 1.25;
  double rel_tol = 1e-12;
  /// Bound on the normalized shooting residual accepted at the root.
  double residual_tol = 1e-8;
  std::size_t sample_points = 512;
};

/// Exclusion floor below which a root is treated as the trivial Neumann mode.
inline constexpr double kNeumannFloor = 1e-9;

struct ShotSample {
  /// Residual of the right boundary condition divided by |(u, u')|, so the
  /// value is scale free and continuous in lambda.
  double residual;
  int zero_count;
};

struct PrincipalRoot {
  double lambda;
  double lower;
  double upper;
  /// Interior sign changes of u just below the root.
  int zero_count;
};

/// Geometric bracket scan from max(start, floor) up to the cap, then TOMS 748
/// refinement of the first sign change whose eigenfunction has no interior
/// zero. Throws NoRootInRange when the cap is reached.
PrincipalRoot find_principal_root(const std::function<ShotSample(double)>& shoot, double floor,
                                  const SearchOptions& options);

}  // namespace robineig
