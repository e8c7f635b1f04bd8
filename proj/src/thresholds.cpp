#include "robineig/thresholds.hpp"

#include <cmath>
#include <numbers>

#include "robineig/errors.hpp"

namespace robineig {

std::string_view regime_name(Regime r) noexcept {
  switch (r) {
    case Regime::Supercritical: return "Supercritical";
    case Regime::Critical: return "Critical";
    case Regime::Subcritical: return "Subcritical";
  }
  return "Unknown";
}

double beta_star(double c, double kappa) {
  if (!(c > 0.0 && c < 1.0)) throw Error(ErrorKind::InvalidArgument, "c must lie in (0, 1)");
  if (!(kappa > 0.0)) throw Error(ErrorKind::InvalidArgument, "kappa must be positive");
  const double root = std::sqrt(kappa);
  if (kappa > 1.0) return 2.0 / (c * root) * std::atan(1.0 / root);
  if (kappa == 1.0) return std::numbers::pi / (2.0 * c);
  return (std::atan(2.0 * root / (kappa - 1.0)) + std::numbers::pi) / (c * root);
}

Regime classify(double beta, double threshold, double rel_tol) noexcept {
  if (std::abs(beta - threshold) <= rel_tol * std::abs(threshold)) return Regime::Critical;
  return beta > threshold ? Regime::Supercritical : Regime::Subcritical;
}

ThresholdReport classify_1d(const Interval& domain, double beta, double c, double kappa) {
  const double bs = beta_star(c, kappa);
  const double scaled = bs / domain.length();
  return {bs, scaled, beta, classify(beta, scaled)};
}

ThresholdReport classify_shell(const ShellProblem& sp, double c_prime) {
  if (sp.n < 2) throw Error(ErrorKind::DimensionError, "shell thresholds need n >= 2");
  const double bs = beta_star(c_prime, sp.params.kappa);
  double scaled = 0.0;
  if (sp.n == 2) {
    scaled = bs / (sp.r1 * (std::log(sp.r2) - std::log(sp.r1)));
  } else {
    const int n = sp.n;
    scaled = (n - 2) * std::pow(sp.r1, 1 - n) * bs /
             (std::pow(sp.r1, 2 - n) - std::pow(sp.r2, 2 - n));
  }
  return {bs, scaled, sp.beta, classify(sp.beta, scaled)};
}

}  // namespace robineig
