#pragma once

#include <vector>

#include "robineig/root_search.hpp"
#include "robineig/weights.hpp"

namespace robineig {

/// 2x2 real matrix acting on the state (u, u').
struct Mat2 {
  double m00, m01, m10, m11;

  double det() const noexcept { return m00 * m11 - m01 * m10; }
};

/// Exact propagator of u'' + lambda*mu*u = 0 over a segment of length h.
Mat2 transfer_matrix(double mu, double h, double lambda);

/// u'' + lambda m(x) u = 0 on (a, b) with u'(a) = beta_left u(a) and
/// u'(b) = -beta_right u(b), m piecewise constant.
struct RobinProblem1D {
  Interval domain;
  double beta_left;
  double beta_right;
  BangBangWeight weight;

  RobinProblem1D(BangBangWeight w, double beta_left, double beta_right);
  RobinProblem1D(BangBangWeight w, double beta) : RobinProblem1D(std::move(w), beta, beta) {}
};

struct ShootResult {
  /// u'(b) + beta_right u(b) for the state actually carried, i.e. the true
  /// residual times exp(-log_scale).
  double residual;
  int zero_count;
  double u;
  double du;
  /// Natural log of the positive factor removed during propagation.
  double log_scale;

  double normalized_residual() const noexcept;
};

/// Propagates (u, u') = (1, beta_left) across the pieces of the weight.
ShootResult shoot(const RobinProblem1D& problem, double lambda);

struct EigenSample {
  double x;
  double u;
  double du;
};

struct EigenResult {
  double lambda = 0.0;
  /// Normalized so that max |u| = 1.
  std::vector<EigenSample> samples;
  int zero_count = 0;
  double residual = 0.0;
};

EigenResult principal_eigenvalue(const RobinProblem1D& problem, const SearchOptions& options = {});

/// Sample grid used for eigenfunctions: `count` uniform points plus the
/// supplied breakpoints, sorted and deduplicated.
std::vector<double> sample_grid(const Interval& domain, std::size_t count,
                                const std::vector<double>& breakpoints);

/// Rescales samples carrying per-point log factors so that max |u| = 1.
std::vector<EigenSample> normalize_samples(const std::vector<EigenSample>& raw,
                                           const std::vector<double>& log_scales);

}  // namespace robineig
