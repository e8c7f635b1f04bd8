#include "robineig/sl_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "robineig/errors.hpp"

namespace robineig {

namespace {

constexpr double kRenormalizeAbove = 1e100;
// Beyond this hyperbolic phase cosh/sinh are evaluated with exp(omega h) factored out.
constexpr double kFactorHyperbolicAbove = 20.0;

struct State {
  double u;
  double du;
  double log_scale;
};

int trig_zeros(double u0, double du0, double omega, double h) {
  constexpr double pi = std::numbers::pi;
  const double phase = std::atan2(du0 / omega, u0) + 0.5 * pi;
  double first = phase - pi * std::floor(phase / pi);
  if (first <= 0.0) first += pi;
  const double span = omega * h;
  if (first > span) return 0;
  return static_cast<int>(std::floor((span - first) / pi)) + 1;
}

int hyperbolic_zeros(double u0, double du0, double omega, double h) {
  if (u0 == 0.0 || du0 == 0.0 || (u0 > 0.0) == (du0 > 0.0)) return 0;
  // tanh(omega s) = -u0 omega / du0 has a root in (0, h] iff the target is below tanh(omega h).
  const double target = -u0 * omega / du0;
  return target <= std::tanh(omega * h) ? 1 : 0;
}

int linear_zeros(double u0, double du0, double h) {
  if (u0 == 0.0 || du0 == 0.0 || (u0 > 0.0) == (du0 > 0.0)) return 0;
  return -u0 / du0 <= h ? 1 : 0;
}

/// Advances the state over a constant-weight piece; returns interior zeros in (x0, x0 + h].
int advance(State& s, double mu, double h, double lambda) {
  if (h <= 0.0) return 0;
  const double k = lambda * mu;
  int zeros = 0;
  double u1 = 0.0;
  double du1 = 0.0;
  if (k > 0.0) {
    const double omega = std::sqrt(k);
    zeros = trig_zeros(s.u, s.du, omega, h);
    const double c = std::cos(omega * h);
    const double sn = std::sin(omega * h);
    u1 = c * s.u + sn / omega * s.du;
    du1 = -omega * sn * s.u + c * s.du;
  } else if (k < 0.0) {
    const double omega = std::sqrt(-k);
    const double phase = omega * h;
    zeros = hyperbolic_zeros(s.u, s.du, omega, h);
    double ch = 0.0;
    double sh = 0.0;
    if (phase <= kFactorHyperbolicAbove) {
      ch = std::cosh(phase);
      sh = std::sinh(phase);
    } else {
      const double decay = std::exp(-2.0 * phase);
      ch = 0.5 * (1.0 + decay);
      sh = -0.5 * std::expm1(-2.0 * phase);
      s.log_scale += phase;
    }
    u1 = ch * s.u + sh / omega * s.du;
    du1 = omega * sh * s.u + ch * s.du;
  } else {
    zeros = linear_zeros(s.u, s.du, h);
    u1 = s.u + h * s.du;
    du1 = s.du;
  }
  s.u = u1;
  s.du = du1;
  const double size = std::max(std::abs(s.u), std::abs(s.du));
  if (size > kRenormalizeAbove) {
    s.u /= size;
    s.du /= size;
    s.log_scale += std::log(size);
  }
  return zeros;
}

}  // namespace

Mat2 transfer_matrix(double mu, double h, double lambda) {
  if (!(h >= 0.0)) throw Error(ErrorKind::InvalidArgument, "segment length must be nonnegative");
  const double k = lambda * mu;
  if (k > 0.0) {
    const double omega = std::sqrt(k);
    const double c = std::cos(omega * h);
    const double s = std::sin(omega * h);
    return {c, s / omega, -omega * s, c};
  }
  if (k < 0.0) {
    const double omega = std::sqrt(-k);
    const double c = std::cosh(omega * h);
    const double s = std::sinh(omega * h);
    return {c, s / omega, omega * s, c};
  }
  return {1.0, h, 0.0, 1.0};
}

RobinProblem1D::RobinProblem1D(BangBangWeight w, double left, double right)
    : domain(w.domain()), beta_left(left), beta_right(right), weight(std::move(w)) {
  if (!(beta_left >= 0.0) || !(beta_right >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "Robin coefficients must be nonnegative");
  }
}

double ShootResult::normalized_residual() const noexcept {
  const double size = std::hypot(u, du);
  return size > 0.0 ? residual / size : residual;
}

ShootResult shoot(const RobinProblem1D& problem, double lambda) {
  State s{1.0, problem.beta_left, 0.0};
  int zeros = 0;
  for (const auto& piece : problem.weight.pieces()) {
    zeros += advance(s, piece.value, piece.span.length(), lambda);
  }
  return {s.du + problem.beta_right * s.u, zeros, s.u, s.du, s.log_scale};
}

std::vector<double> sample_grid(const Interval& domain, std::size_t count,
                                const std::vector<double>& breakpoints) {
  std::vector<double> xs;
  xs.reserve(count + breakpoints.size() + 2);
  if (count < 2) count = 2;
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    xs.push_back(i + 1 == count ? domain.b : domain.a + f * domain.length());
  }
  xs.insert(xs.end(), breakpoints.begin(), breakpoints.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<EigenSample> normalize_samples(const std::vector<EigenSample>& raw,
                                           const std::vector<double>& log_scales) {
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double mag = std::abs(raw[i].u);
    if (mag > 0.0) peak = std::max(peak, std::log(mag) + log_scales[i]);
  }
  std::vector<EigenSample> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double factor = std::exp(log_scales[i] - peak);
    out.push_back({raw[i].x, raw[i].u * factor, raw[i].du * factor});
  }
  return out;
}

EigenResult principal_eigenvalue(const RobinProblem1D& problem, const SearchOptions& options) {
  const auto pieces = problem.weight.pieces();
  const bool has_positive = std::any_of(pieces.begin(), pieces.end(),
                                        [](const WeightPiece& p) { return p.value > 0.0; });
  const bool has_negative = std::any_of(pieces.begin(), pieces.end(),
                                        [](const WeightPiece& p) { return p.value < 0.0; });
  if (!has_positive || !has_negative) {
    throw Error(ErrorKind::NoSignChange, "weight does not change sign");
  }
  double floor = 0.0;
  if (problem.beta_left == 0.0 && problem.beta_right == 0.0) {
    if (weight_mean(problem.weight) >= 0.0) {
      throw Error(ErrorKind::ConstraintViolated,
                  "Neumann problem needs a negative mean weight for a positive principal eigenvalue");
    }
    floor = kNeumannFloor;
  }

  const auto root = find_principal_root(
      [&](double lambda) {
        const ShootResult r = shoot(problem, lambda);
        return ShotSample{r.normalized_residual(), r.zero_count};
      },
      floor, options);

  EigenResult result;
  result.lambda = root.lambda;
  result.zero_count = root.zero_count;
  result.residual = shoot(problem, root.lambda).normalized_residual();

  std::vector<double> breaks;
  for (const auto& p : pieces) breaks.push_back(p.span.a);
  const auto xs = sample_grid(problem.domain, options.sample_points, breaks);

  std::vector<EigenSample> raw;
  std::vector<double> scales;
  raw.reserve(xs.size());
  scales.reserve(xs.size());
  State start{1.0, problem.beta_left, 0.0};
  std::size_t next = 0;
  for (const auto& piece : pieces) {
    const bool last = &piece == &pieces.back();
    while (next < xs.size() && (xs[next] < piece.span.b || (last && xs[next] <= piece.span.b))) {
      State s = start;
      advance(s, piece.value, xs[next] - piece.span.a, root.lambda);
      raw.push_back({xs[next], s.u, s.du});
      scales.push_back(s.log_scale);
      ++next;
    }
    advance(start, piece.value, piece.span.length(), root.lambda);
  }
  result.samples = normalize_samples(raw, scales);
  return result;
}

}  // namespace robineig
