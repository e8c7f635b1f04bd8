#include "robineig/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "robineig/errors.hpp"

namespace robineig {

namespace {

void require_dimension(int n) {
  if (n < 2) throw Error(ErrorKind::DimensionError, "change of variables needs n >= 2");
}

// prod_{k=1}^{n-2} Gamma((k+1)/2) / Gamma(k/2 + 1)
double gamma_product(int n) {
  double prod = 1.0;
  for (int k = 1; k <= n - 2; ++k) prod *= std::tgamma(0.5 * (k + 1)) / std::tgamma(0.5 * k + 1.0);
  return prod;
}

}  // namespace

double map_r_to_t(int n, double r) {
  require_dimension(n);
  if (!(r > 0.0)) throw Error(ErrorKind::DomainError, "radius must be positive");
  if (n == 2) return std::log(r);
  return std::pow(r, 2.0 - n) / (2.0 - n);
}

double map_t_to_r(int n, double t) {
  require_dimension(n);
  if (n == 2) return std::exp(t);
  if (!(t < 0.0)) throw Error(ErrorKind::DomainError, "t must be negative for n >= 3");
  return std::pow((2.0 - n) * t, 1.0 / (2.0 - n));
}

double solid_angle_constant(int n) {
  require_dimension(n);
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) * gamma_product(n);
}

double shell_volume(int n, double r1, double r2) {
  return std::pow(std::numbers::pi, 0.5 * n) * (std::pow(r2, n) - std::pow(r1, n)) /
         std::tgamma(0.5 * n + 1.0);
}

double q_lower_bound(const ShellProblem& sp) {
  require_dimension(sp.n);
  const double m0 = sp.params.m0;
  if (sp.n == 2) return m0 / (2.0 * (std::log(sp.r2) - std::log(sp.r1)));
  const int n = sp.n;
  const double t_length = map_r_to_t(n, sp.r2) - map_r_to_t(n, sp.r1);
  // 2 |Omega_t| r2^{2n-2} / (2 |Omega| / S_n) with the standard shell volume.
  const double radial_volume = shell_volume(n, sp.r1, sp.r2) / solid_angle_constant(n);
  const double bound = t_length * std::pow(sp.r2, 2 * n - 2) / radial_volume;
  return std::max(m0, bound);
}

namespace {

double q_lower_bound_printed(const ShellProblem& sp) {
  if (sp.n == 2) return q_lower_bound(sp);
  const int n = sp.n;
  const double t_length = map_r_to_t(n, sp.r2) - map_r_to_t(n, sp.r1);
  const double bound = 2.0 * t_length * std::pow(sp.r2, 2 * n - 2) * std::tgamma(0.5 * n + 1.0) /
                       (sp.r2 * sp.r2 - sp.r1 * sp.r1) * gamma_product(n);
  return std::max(sp.params.m0, bound);
}

}  // namespace

ReducedProblem reduce(const ShellProblem& sp, std::optional<double> q) {
  require_dimension(sp.n);
  if (!(sp.params.m0 > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "reduction needs m0 > 0");
  }
  const int n = sp.n;
  const double bound = q_lower_bound(sp);
  const double q_value = q.value_or(2.0 * bound);
  if (!(q_value > bound)) {
    std::ostringstream os;
    os << "q = " << q_value << " must exceed " << bound;
    throw Error(ErrorKind::QTooSmall, os.str());
  }

  const double t1 = map_r_to_t(n, sp.r1);
  const double t2 = map_r_to_t(n, sp.r2);
  const double beta_prime = sp.beta * std::pow(sp.r1, n - 1);
  const double ratio = std::pow(sp.r2 / sp.r1, n - 1);

  double m0_prime = 0.0;
  double lambda_factor = 0.0;
  if (n == 2) {
    lambda_factor = sp.r2 * sp.r2;
    m0_prime = sp.params.m0 * (sp.r2 * sp.r2 - sp.r1 * sp.r1) /
               (2.0 * q_value * sp.r2 * sp.r2 * (std::log(sp.r2) - std::log(sp.r1)));
  } else {
    lambda_factor = std::pow(sp.r2, 2 * n - 2);
    m0_prime = sp.params.m0 / q_value;
  }

  const Interval t_domain(t1, t2);
  std::vector<Interval> segments_t;
  for (const auto& s : sp.weight_r.segments()) {
    const double a = s.a == sp.r1 ? t1 : map_r_to_t(n, s.a);
    const double b = s.b == sp.r2 ? t2 : map_r_to_t(n, s.b);
    segments_t.emplace_back(std::max(t1, a), std::min(t2, b));
  }

  return ReducedProblem{
      n,
      sp.r1,
      sp.r2,
      sp.params.kappa,
      t_domain,
      beta_prime,
      beta_prime * ratio,
      lambda_factor,
      q_value,
      bound,
      q_lower_bound_printed(sp),
      m0_prime,
      (1.0 - m0_prime) / (1.0 + sp.params.kappa),
      BangBangWeight(t_domain, sp.params.kappa, std::move(segments_t)),
  };
}

double ReducedProblem::scale_factor(double t) const {
  return std::pow(map_t_to_r(n, t), 2 * n - 2) / lambda_factor;
}

double ReducedProblem::exact_weight(double t) const {
  return weight_t.evaluate(t) * scale_factor(t);
}

PiecewiseSmoothProblem ReducedProblem::exact_problem() const {
  PiecewiseSmoothProblem p = piecewise_from_weight(weight_t);
  const int dim = n;
  const double factor = lambda_factor;
  if (dim == 2) {
    p.factor = [factor](double t) { return std::exp(2.0 * t) / factor; };
  } else {
    const double exponent = (2.0 * dim - 2.0) / (2.0 - dim);
    p.factor = [dim, factor, exponent](double t) {
      return std::pow((2.0 - dim) * t, exponent) / factor;
    };
  }
  p.beta_left = beta_left;
  p.beta_right = beta_right;
  return p;
}

RobinProblem1D ReducedProblem::relaxed_problem() const {
  return RobinProblem1D(weight_t, beta_left, beta_right);
}

EigenResult reduced_exact_eigenvalue(const ReducedProblem& rp, const RadialOptions& options) {
  const double floor = rp.beta_left == 0.0 && rp.beta_right == 0.0 ? kNeumannFloor : 0.0;
  return principal_eigenvalue_ode(rp.exact_problem(), floor, options.ode, options.search);
}

}  // namespace robineig
