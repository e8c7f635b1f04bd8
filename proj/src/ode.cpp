#include "robineig/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "robineig/errors.hpp"

namespace robineig {

namespace {

constexpr double kRenormalizeAbove = 1e100;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

using Vec = std::array<double, 2>;

struct Integrator {
  const PiecewiseSmoothProblem& problem;
  double lambda;
  const OdeOptions& options;

  Vec y{1.0, 0.0};
  double log_scale = 0.0;
  int zeros = 0;
  std::size_t steps = 0;
  double h_guess = 0.0;

  Vec rhs(double x, const Vec& s, double level) const {
    const double p = problem.drift ? problem.drift(x) : 0.0;
    const double f = problem.factor ? problem.factor(x) : 1.0;
    return {s[1], -p * s[1] - lambda * level * f * s[0]};
  }

  void renormalize() {
    const double size = std::max(std::abs(y[0]), std::abs(y[1]));
    if (size > kRenormalizeAbove) {
      y[0] /= size;
      y[1] /= size;
      log_scale += std::log(size);
    }
  }

  // Integrates from x to x_end (same piece); the step sequence never crosses x_end.
  void run(double x, double x_end, double level) {
    if (h_guess <= 0.0) h_guess = (x_end - x) / 16.0;
    double h = h_guess;
    while (x < x_end) {
      const double remaining = x_end - x;
      bool final = false;
      const double proposed = h;
      const double tiny = 1e-14 * std::max(1.0, std::abs(x));
      // Snap to the end rather than leave a sliver the next step cannot resolve.
      if (h >= remaining - tiny) {
        h = remaining;
        final = true;
      }
      if (!final && h <= tiny) {
        std::ostringstream os;
        os << "step size underflow at x = " << x << " (lambda = " << lambda << ")";
        throw Error(ErrorKind::StepFailure, os.str());
      }
      if (++steps > options.max_steps) {
        throw Error(ErrorKind::StepFailure, "step budget exhausted");
      }
      const Vec k1 = rhs(x, y, level);
      const Vec k2 = rhs(x + c2 * h, {y[0] + h * a21 * k1[0], y[1] + h * a21 * k1[1]}, level);
      const Vec k3 = rhs(x + c3 * h,
                         {y[0] + h * (a31 * k1[0] + a32 * k2[0]),
                          y[1] + h * (a31 * k1[1] + a32 * k2[1])},
                         level);
      const Vec k4 = rhs(x + c4 * h,
                         {y[0] + h * (a41 * k1[0] + a42 * k2[0] + a43 * k3[0]),
                          y[1] + h * (a41 * k1[1] + a42 * k2[1] + a43 * k3[1])},
                         level);
      const Vec k5 =
          rhs(x + c5 * h,
              {y[0] + h * (a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0]),
               y[1] + h * (a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1])},
              level);
      const double x6 = final ? x_end : x + h;
      const Vec k6 =
          rhs(x6,
              {y[0] + h * (a61 * k1[0] + a62 * k2[0] + a63 * k3[0] + a64 * k4[0] + a65 * k5[0]),
               y[1] + h * (a61 * k1[1] + a62 * k2[1] + a63 * k3[1] + a64 * k4[1] + a65 * k5[1])},
              level);
      Vec next{};
      for (int i = 0; i < 2; ++i) {
        next[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
      }
      const Vec k7 = rhs(x6, next, level);
      double err = 0.0;
      for (int i = 0; i < 2; ++i) {
        const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                               e7 * k7[i]);
        err = std::max(err, std::abs(ei));
      }
      const double scale =
          std::max({std::abs(y[0]), std::abs(y[1]), std::abs(next[0]), std::abs(next[1])});
      err /= options.rel_tol * scale;
      if (err <= 1.0) {
        if ((y[0] > 0.0 && next[0] <= 0.0) || (y[0] < 0.0 && next[0] >= 0.0)) ++zeros;
        y = next;
        x = final ? x_end : x + h;
        renormalize();
        const double grow = err == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
        if (!final) h *= grow;
        else h_guess = std::max(h * grow, proposed);  // a snapped step says nothing about the scale
      } else {
        h *= std::max(0.1, 0.9 * std::pow(err, -0.2));
      }
    }
  }
};

}  // namespace

double OdeShot::normalized_residual() const noexcept {
  const double size = std::hypot(u, du);
  return size > 0.0 ? residual / size : residual;
}

OdeShot shoot_ode(const PiecewiseSmoothProblem& problem, double lambda, const OdeOptions& options) {
  Integrator it{problem, lambda, options};
  it.y = {1.0, problem.beta_left};
  for (const auto& piece : problem.pieces) {
    it.run(piece.span.a, piece.span.b, piece.level);
  }
  return {it.y[1] + problem.beta_right * it.y[0], it.zeros, it.y[0], it.y[1], it.log_scale,
          it.steps};
}

std::vector<EigenSample> sample_ode(const PiecewiseSmoothProblem& problem, double lambda,
                                    std::span<const double> xs, const OdeOptions& options) {
  Integrator it{problem, lambda, options};
  it.y = {1.0, problem.beta_left};
  std::vector<EigenSample> raw;
  std::vector<double> scales;
  raw.reserve(xs.size());
  scales.reserve(xs.size());
  std::size_t next = 0;
  const double left = problem.pieces.front().span.a;
  while (next < xs.size() && xs[next] <= left) {
    raw.push_back({xs[next], it.y[0], it.y[1]});
    scales.push_back(it.log_scale);
    ++next;
  }
  for (const auto& piece : problem.pieces) {
    double x = piece.span.a;
    while (next < xs.size() && xs[next] <= piece.span.b) {
      if (xs[next] > x) {
        it.run(x, xs[next], piece.level);
        x = xs[next];
      }
      raw.push_back({xs[next], it.y[0], it.y[1]});
      scales.push_back(it.log_scale);
      ++next;
    }
    if (x < piece.span.b) it.run(x, piece.span.b, piece.level);
  }
  return normalize_samples(raw, scales);
}

EigenResult principal_eigenvalue_ode(const PiecewiseSmoothProblem& problem, double floor,
                                     const OdeOptions& ode, const SearchOptions& search) {
  const auto root = find_principal_root(
      [&](double lambda) {
        const OdeShot s = shoot_ode(problem, lambda, ode);
        return ShotSample{s.normalized_residual(), s.zero_count};
      },
      floor, search);
  EigenResult result;
  result.lambda = root.lambda;
  result.zero_count = root.zero_count;
  result.residual = shoot_ode(problem, root.lambda, ode).normalized_residual();
  std::vector<double> breaks;
  for (const auto& p : problem.pieces) breaks.push_back(p.span.a);
  const auto xs = sample_grid(problem.domain(), search.sample_points, breaks);
  result.samples = sample_ode(problem, root.lambda, xs, ode);
  return result;
}

PiecewiseSmoothProblem piecewise_from_weight(const BangBangWeight& weight) {
  PiecewiseSmoothProblem p;
  for (const auto& piece : weight.pieces()) p.pieces.push_back({piece.span, piece.value});
  return p;
}

}  // namespace robineig
