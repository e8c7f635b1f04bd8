#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "robineig/optimal_sets.hpp"
#include "robineig/reduction.hpp"
#include "robineig/sl_core.hpp"
#include "robineig/thresholds.hpp"
#include "robineig/verifier.hpp"
#include "robineig/weights.hpp"

namespace robineig {

using Json = nlohmann::ordered_json;

Json to_json(const Interval& i);
Json to_json(const BangBangWeight& w);
/// Parses {"domain":[a,b],"kappa":k,"segments":[[s1,e1],...]}.
BangBangWeight weight_from_json(const Json& j);

Json to_json(const EigenResult& r);
Json to_json(const ThresholdReport& r);
Json to_json(const ReducedProblem& r);
Json to_json(const OptimalSetPrediction& p);
Json to_json(const SweepResult& s);

/// Two-column CSV with header "x,u".
void write_eigenfunction_csv(std::ostream& os, const EigenResult& r);
/// Header "anchor,lambda".
void write_sweep_csv(std::ostream& os, const SweepResult& s);
/// Header "regime,variable,left,right"; critical families emit the anchor range.
void write_prediction_csv(std::ostream& os, const OptimalSetPrediction& p);

struct CsvSeries {
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Reads the first two columns of a header-plus-rows CSV.
CsvSeries read_two_column_csv(std::istream& is);

/// Standalone 800x600 SVG line chart with linear axes.
std::string render_line_chart(const CsvSeries& series, const std::string& title);

}  // namespace robineig
