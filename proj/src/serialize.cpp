#include "robineig/serialize.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "robineig/errors.hpp"

namespace robineig {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json to_json(const Interval& i) { return Json::array({i.a, i.b}); }

Json to_json(const BangBangWeight& w) {
  Json segments = Json::array();
  for (const auto& s : w.segments()) segments.push_back(to_json(s));
  return Json{{"domain", to_json(w.domain())}, {"kappa", w.kappa()}, {"segments", segments}};
}

BangBangWeight weight_from_json(const Json& j) {
  try {
    const auto& d = j.at("domain");
    std::vector<Interval> segments;
    for (const auto& s : j.at("segments")) {
      segments.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
    }
    return BangBangWeight(Interval(d.at(0).get<double>(), d.at(1).get<double>()),
                          j.at("kappa").get<double>(), std::move(segments));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed weight JSON: ") + e.what());
  }
}

Json to_json(const EigenResult& r) {
  return Json{{"lambda", r.lambda},
              {"zero_count", r.zero_count},
              {"residual", r.residual},
              {"sample_count", r.samples.size()}};
}

Json to_json(const ThresholdReport& r) {
  return Json{{"beta_star", r.beta_star},
              {"beta_star_scaled", r.beta_star_scaled},
              {"beta", r.beta},
              {"regime", std::string(regime_name(r.regime))},
              {"comparison_tolerance", r.comparison_tolerance}};
}

Json to_json(const ReducedProblem& r) {
  return Json{{"n", r.n},
              {"t_domain", to_json(r.t_domain)},
              {"beta_left", r.beta_left},
              {"beta_right", r.beta_right},
              {"lambda_factor", r.lambda_factor},
              {"q", r.q},
              {"q_lower_bound", r.q_lower_bound},
              {"q_lower_bound_with_r2_squared_volume", r.q_lower_bound_as_printed},
              {"m0_prime", r.m0_prime},
              {"c_prime", r.c_prime},
              {"weight_t", to_json(r.weight_t)}};
}

Json to_json(const OptimalSetPrediction& p) {
  Json sets = Json::array();
  for (const auto& s : p.sets) sets.push_back(to_json(s));
  Json out{{"regime", std::string(regime_name(p.regime))},
           {"variable", std::string(variable_name(p.variable))},
           {"sets", sets}};
  if (p.family) {
    out["family"] = Json{{"anchor_range", to_json(p.family->anchor_range)},
                         {"length", p.family->length},
                         {"length_variable", std::string(variable_name(p.family->length_variable))}};
  } else {
    out["family"] = nullptr;
  }
  return out;
}

Json to_json(const SweepResult& s) {
  return Json{{"anchor_variable", std::string(variable_name(s.anchor_variable))},
              {"raw_r_length", s.raw_r_length},
              {"grid_points", s.placements.size()},
              {"grid_spacing", s.grid_spacing},
              {"set_length", s.set_length},
              {"argmin_anchor", s.argmin_anchor},
              {"lambda_min", s.lambda_min},
              {"lambda_range", s.lambda_range}};
}

void write_eigenfunction_csv(std::ostream& os, const EigenResult& r) {
  os << "x,u\n";
  for (const auto& s : r.samples) os << num(s.x) << ',' << num(s.u) << '\n';
}

void write_sweep_csv(std::ostream& os, const SweepResult& s) {
  os << "anchor,lambda\n";
  for (const auto& p : s.placements) os << num(p.anchor) << ',' << num(p.lambda) << '\n';
}

void write_prediction_csv(std::ostream& os, const OptimalSetPrediction& p) {
  os << "regime,variable,left,right\n";
  const std::string regime(regime_name(p.regime));
  const std::string var(variable_name(p.variable));
  for (const auto& s : p.sets) os << regime << ',' << var << ',' << num(s.a) << ',' << num(s.b) << '\n';
  if (p.family) {
    os << regime << ',' << var << ',' << num(p.family->anchor_range.a) << ','
       << num(p.family->anchor_range.b) << '\n';
  }
}

CsvSeries read_two_column_csv(std::istream& is) {
  CsvSeries out;
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::InvalidArgument, "empty CSV");
  {
    std::istringstream header(line);
    if (!std::getline(header, out.x_label, ',') || !std::getline(header, out.y_label, ',')) {
      throw Error(ErrorKind::InvalidArgument, "CSV header needs two columns");
    }
    if (!out.y_label.empty() && out.y_label.back() == '\r') out.y_label.pop_back();
  }
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string xs, ys;
    std::getline(fields, xs, ',');
    std::getline(fields, ys, ',');
    try {
      out.x.push_back(std::stod(xs));
      out.y.push_back(std::stod(ys));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "non-numeric CSV row " + std::to_string(row));
    }
  }
  if (out.x.size() < 2) throw Error(ErrorKind::InvalidArgument, "CSV needs at least two rows");
  return out;
}

}  // namespace robineig
