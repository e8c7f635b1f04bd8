#include "robineig/radial.hpp"

#include <cmath>

#include "robineig/errors.hpp"

namespace robineig {

ShellProblem::ShellProblem(int dim, double inner, double outer, const AdmissibilityParams& p,
                           std::vector<Interval> segments)
    : n(dim),
      r1(inner),
      r2(outer),
      beta(p.beta),
      weight_r(Interval(inner, outer), p.kappa, std::move(segments)),
      params(p) {
  if (n < 1) throw Error(ErrorKind::DimensionError, "dimension must be at least 1");
  if (!(r1 > 0.0)) throw Error(ErrorKind::InvalidArgument, "shell needs 0 < r1 < r2");
  params.validate();
}

ShellProblem ShellProblem::with_segments(std::vector<Interval> segments) const {
  return ShellProblem(n, r1, r2, params, std::move(segments));
}

PiecewiseSmoothProblem radial_ode(const ShellProblem& sp) {
  PiecewiseSmoothProblem p = piecewise_from_weight(sp.weight_r);
  if (sp.n != 1) {
    const double curvature = sp.n - 1.0;
    p.drift = [curvature](double r) { return curvature / r; };
  }
  p.beta_left = sp.beta;
  p.beta_right = sp.beta;
  return p;
}

RadialShot radial_shoot(const ShellProblem& sp, double lambda, const OdeOptions& options) {
  const OdeShot s = shoot_ode(radial_ode(sp), lambda, options);
  return {s.normalized_residual(), s.zero_count};
}

double radial_weighted_integral(const ShellProblem& sp) {
  double total = 0.0;
  for (const auto& piece : sp.weight_r.pieces()) {
    total += piece.value *
             (std::pow(piece.span.b, sp.n) - std::pow(piece.span.a, sp.n)) / sp.n;
  }
  return total;
}

EigenResult radial_principal_eigenvalue(const ShellProblem& sp, const RadialOptions& options) {
  double floor = 0.0;
  if (sp.beta == 0.0) {
    if (radial_weighted_integral(sp) >= 0.0) {
      throw Error(ErrorKind::ConstraintViolated,
                  "Neumann shell problem needs a negative weighted mean");
    }
    floor = kNeumannFloor;
  }
  return principal_eigenvalue_ode(radial_ode(sp), floor, options.ode, options.search);
}

std::vector<EigenSample> radial_profile(const ShellProblem& sp, double lambda,
                                        std::span<const double> radii, const OdeOptions& options) {
  return sample_ode(radial_ode(sp), lambda, radii, options);
}

}  // namespace robineig
