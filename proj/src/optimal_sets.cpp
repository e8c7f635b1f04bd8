#include "robineig/optimal_sets.hpp"

#include <cmath>

#include "robineig/errors.hpp"
#include "robineig/reduction.hpp"

namespace robineig {

std::string_view variable_name(Variable v) noexcept {
  switch (v) {
    case Variable::X: return "x";
    case Variable::T: return "t";
    case Variable::R: return "r";
  }
  return "?";
}

OptimalSetPrediction predict_interval(const Interval& domain, Regime regime, double c,
                                      Variable variable) {
  if (!(c > 0.0 && c < 1.0)) throw Error(ErrorKind::InvalidArgument, "c must lie in (0, 1)");
  const double a = domain.a;
  const double b = domain.b;
  const double len = c * (b - a);
  OptimalSetPrediction out{regime, {}, std::nullopt, variable};
  switch (regime) {
    case Regime::Supercritical: {
      const double mid = 0.5 * (a + b);
      out.sets.emplace_back(mid - 0.5 * len, mid + 0.5 * len);
      break;
    }
    case Regime::Critical:
      out.family = SetFamily{Interval(a, b - len), len, variable};
      break;
    case Regime::Subcritical:
      out.sets.emplace_back(a, a + len);
      out.sets.emplace_back(b - len, b);
      break;
  }
  return out;
}

OptimalSetPrediction predict_1d(const Interval& domain, double beta, double c, double kappa) {
  const ThresholdReport report = classify_1d(domain, beta, c, kappa);
  return predict_interval(domain, report.regime, c, Variable::X);
}

OptimalSetPrediction predict_shell_2d(const ShellProblem& sp, double cp) {
  if (sp.n != 2) throw Error(ErrorKind::DimensionError, "predict_shell_2d needs n = 2");
  const double r1 = sp.r1;
  const double r2 = sp.r2;
  const Regime regime = classify_shell(sp, cp).regime;
  OptimalSetPrediction out{regime, {}, std::nullopt, Variable::R};
  switch (regime) {
    case Regime::Supercritical:
      out.sets.emplace_back(std::pow(r1, 0.5 * (1 + cp)) * std::pow(r2, 0.5 * (1 - cp)),
                            std::pow(r1, 0.5 * (1 - cp)) * std::pow(r2, 0.5 * (1 + cp)));
      break;
    case Regime::Critical:
      // (r0, r0 r1^{-c'} r2^{c'}) for r0 in [r1, r1^{c'} r2^{1-c'}].
      out.family = SetFamily{Interval(r1, std::pow(r1, cp) * std::pow(r2, 1 - cp)),
                             cp * (std::log(r2) - std::log(r1)), Variable::T};
      break;
    case Regime::Subcritical:
      out.sets.emplace_back(r1, std::pow(r1, 1 - cp) * std::pow(r2, cp));
      out.sets.emplace_back(std::pow(r1, cp) * std::pow(r2, 1 - cp), r2);
      break;
  }
  return out;
}

OptimalSetPrediction predict_shell_nd(const ShellProblem& sp, double cp) {
  if (sp.n < 3) throw Error(ErrorKind::DimensionError, "predict_shell_nd needs n >= 3");
  const int n = sp.n;
  const double p1 = std::pow(sp.r1, 2 - n);
  const double p2 = std::pow(sp.r2, 2 - n);
  const double inv = 1.0 / (2 - n);
  const Regime regime = classify_shell(sp, cp).regime;
  OptimalSetPrediction out{regime, {}, std::nullopt, Variable::R};
  switch (regime) {
    case Regime::Supercritical:
      out.sets.emplace_back(std::pow(0.5 * ((1 + cp) * p1 + (1 - cp) * p2), inv),
                            std::pow(0.5 * ((1 - cp) * p1 + (1 + cp) * p2), inv));
      break;
    case Regime::Critical: {
      // Anchors t0 in [r1^{2-n}/(2-n), ((1-c') r2^{2-n} + c' r1^{2-n})/(2-n)], mapped to r.
      const double t_hi = ((1 - cp) * p2 + cp * p1) * inv;
      out.family = SetFamily{Interval(sp.r1, map_t_to_r(n, t_hi)), cp * (p2 - p1) * inv,
                             Variable::T};
      break;
    }
    case Regime::Subcritical:
      out.sets.emplace_back(sp.r1, std::pow((1 - cp) * p1 + cp * p2, inv));
      out.sets.emplace_back(std::pow((1 - cp) * p2 + cp * p1, inv), sp.r2);
      break;
  }
  return out;
}

OptimalSetPrediction predict_shell(const ShellProblem& sp, double c_prime) {
  return sp.n == 2 ? predict_shell_2d(sp, c_prime) : predict_shell_nd(sp, c_prime);
}

OptimalSetPrediction pullback_to_t(const OptimalSetPrediction& prediction, int n) {
  if (prediction.variable != Variable::R) {
    throw Error(ErrorKind::InvalidArgument, "pullback expects an r-variable prediction");
  }
  OptimalSetPrediction out{prediction.regime, {}, prediction.family, Variable::T};
  for (const auto& s : prediction.sets) {
    out.sets.emplace_back(map_r_to_t(n, s.a), map_r_to_t(n, s.b));
  }
  if (out.family) {
    out.family->anchor_range =
        Interval(map_r_to_t(n, prediction.family->anchor_range.a),
                 map_r_to_t(n, prediction.family->anchor_range.b));
  }
  return out;
}

}  // namespace robineig
