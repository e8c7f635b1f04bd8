#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "robineig/radial.hpp"
#include "robineig/thresholds.hpp"
#include "robineig/weights.hpp"

namespace robineig {

enum class Variable { X, T, R };

std::string_view variable_name(Variable v) noexcept;

/// Family of optimal sets in the critical regime: every interval whose left
/// end lies in anchor_range and whose length, measured in length_variable,
/// equals `length`.
struct SetFamily {
  Interval anchor_range;
  double length;
  Variable length_variable;
};

struct OptimalSetPrediction {
  Regime regime;
  /// One set when Supercritical, the two flush candidates when Subcritical,
  /// empty when Critical.
  std::vector<Interval> sets;
  std::optional<SetFamily> family;
  Variable variable;
};

/// Optimal-set prediction on an interval for a known regime.
OptimalSetPrediction predict_interval(const Interval& domain, Regime regime, double c,
                                      Variable variable = Variable::X);

OptimalSetPrediction predict_1d(const Interval& domain, double beta, double c, double kappa);

/// Throws DimensionError unless n == 2.
OptimalSetPrediction predict_shell_2d(const ShellProblem& sp, double c_prime);
/// Throws DimensionError unless n >= 3.
OptimalSetPrediction predict_shell_nd(const ShellProblem& sp, double c_prime);
/// Dispatches on the dimension.
OptimalSetPrediction predict_shell(const ShellProblem& sp, double c_prime);

/// Maps an r-variable prediction into the t variable through map_r_to_t.
OptimalSetPrediction pullback_to_t(const OptimalSetPrediction& prediction, int n);

}  // namespace robineig
