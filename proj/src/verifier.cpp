#include "robineig/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "robineig/errors.hpp"

namespace robineig {

std::vector<double> parallel_evaluate(std::size_t count,
                                      const std::function<double(std::size_t)>& fn) {
  std::vector<double> out(count);
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

SweepResult summarize(std::vector<double> anchors, const std::vector<double>& lambdas) {
  SweepResult r;
  r.placements.reserve(anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i) r.placements.push_back({anchors[i], lambdas[i]});
  const auto [lo, hi] = std::minmax_element(lambdas.begin(), lambdas.end());
  r.lambda_min = *lo;
  r.lambda_range = *hi - *lo;
  r.argmin_anchor = anchors[static_cast<std::size_t>(lo - lambdas.begin())];
  r.grid_spacing = anchors.size() > 1 ? anchors[1] - anchors[0] : 0.0;
  return r;
}

std::vector<double> uniform_anchors(double lo, double hi, int points) {
  std::vector<double> anchors(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    anchors[static_cast<std::size_t>(i)] =
        i + 1 == points ? hi : lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  return anchors;
}

void require_grid(int grid_points) {
  if (grid_points < 3) throw Error(ErrorKind::InvalidArgument, "sweeps need at least 3 grid points");
}

Interval clamped(double a, double b, const Interval& domain) {
  return {std::max(domain.a, a), std::min(domain.b, b)};
}

}  // namespace

SweepResult sweep_placements_1d(const Interval& domain, double beta_left, double beta_right,
                                double c, double kappa, int grid_points) {
  require_grid(grid_points);
  const double len = c * domain.length();
  auto anchors = uniform_anchors(domain.a, domain.b - len, grid_points);
  const BangBangWeight base(domain, kappa, {Interval(domain.a, domain.a + len)});
  const auto lambdas = parallel_evaluate(anchors.size(), [&](std::size_t i) {
    const double s = anchors[i];
    const RobinProblem1D p(base.with_segments({clamped(s, s + len, domain)}), beta_left, beta_right);
    return principal_eigenvalue(p).lambda;
  });
  SweepResult r = summarize(std::move(anchors), lambdas);
  r.set_length = len;
  r.anchor_variable = Variable::X;
  return r;
}

SweepResult sweep_placements_radial(const ShellProblem& sp, double c_weighted, int grid_points,
                                    SweepLength mode, const RadialOptions& options) {
  require_grid(grid_points);
  const Interval rdom = sp.radial_domain();
  std::vector<double> anchors;
  std::function<Interval(double)> set_for;
  double len = 0.0;
  Variable variable = Variable::R;
  if (mode == SweepLength::FixedT) {
    if (sp.n < 2) throw Error(ErrorKind::DimensionError, "t-length sweeps need n >= 2");
    const double t1 = map_r_to_t(sp.n, sp.r1);
    const double t2 = map_r_to_t(sp.n, sp.r2);
    len = c_weighted * (t2 - t1);
    anchors = uniform_anchors(t1, t2 - len, grid_points);
    variable = Variable::T;
    set_for = [&, len, t1, t2](double t0) {
      const double a = t0 <= t1 ? sp.r1 : map_t_to_r(sp.n, t0);
      const double b = t0 + len >= t2 ? sp.r2 : map_t_to_r(sp.n, t0 + len);
      return clamped(a, b, rdom);
    };
  } else {
    len = c_weighted * rdom.length();
    anchors = uniform_anchors(sp.r1, sp.r2 - len, grid_points);
    set_for = [&, len](double r0) { return clamped(r0, r0 + len, rdom); };
  }
  const auto lambdas = parallel_evaluate(anchors.size(), [&](std::size_t i) {
    return radial_principal_eigenvalue(sp.with_segments({set_for(anchors[i])}), options).lambda;
  });
  SweepResult r = summarize(std::move(anchors), lambdas);
  r.set_length = len;
  r.anchor_variable = variable;
  r.raw_r_length = mode == SweepLength::FixedR;
  return r;
}

double find_threshold(const Interval& domain, double c, double kappa,
                      std::pair<double, double> beta_bracket) {
  const double len = c * domain.length();
  const BangBangWeight left(domain, kappa, {Interval(domain.a, domain.a + len)});
  const double mid = domain.midpoint();
  const BangBangWeight centred = left.with_segments({Interval(mid - 0.5 * len, mid + 0.5 * len)});
  auto gap = [&](double beta) {
    return principal_eigenvalue(RobinProblem1D(left, beta)).lambda -
           principal_eigenvalue(RobinProblem1D(centred, beta)).lambda;
  };
  double lo = beta_bracket.first;
  double hi = beta_bracket.second;
  double g_lo = gap(lo);
  const double g_hi = gap(hi);
  if ((g_lo < 0.0) == (g_hi < 0.0)) {
    throw Error(ErrorKind::NoSignChangeInBracket, "placement gap does not change sign on bracket");
  }
  while (hi - lo > 1e-6) {
    const double m = 0.5 * (lo + hi);
    const double g = gap(m);
    if ((g < 0.0) == (g_lo < 0.0)) {
      lo = m;
      g_lo = g;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

struct Pencil {
  std::vector<double> stiff_diag;
  double stiff_off;
  double beta_left;
  double beta_right;
  std::vector<double> mass;  // lumped, exact hat integrals of m
};

Pencil assemble(const RobinProblem1D& problem, int nodes) {
  const std::size_t n = static_cast<std::size_t>(nodes);
  const double a = problem.domain.a;
  const double h = problem.domain.length() / (nodes - 1);
  Pencil p;
  p.stiff_off = -1.0 / h;
  p.beta_left = problem.beta_left;
  p.beta_right = problem.beta_right;
  p.stiff_diag.assign(n, 2.0 / h);
  p.stiff_diag.front() = 1.0 / h + problem.beta_left;
  p.stiff_diag.back() = 1.0 / h + problem.beta_right;
  p.mass.assign(n, 0.0);
  const auto pieces = problem.weight.pieces();
  std::size_t k = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double xl = a + h * static_cast<double>(j);
    const double xr = j + 2 == n ? problem.domain.b : a + h * static_cast<double>(j + 1);
    while (k < pieces.size() && pieces[k].span.b <= xl) ++k;
    for (std::size_t m = k; m < pieces.size() && pieces[m].span.a < xr; ++m) {
      const double lo = std::max(xl, pieces[m].span.a) - xl;
      const double hi = std::min(xr, pieces[m].span.b) - xl;
      if (hi <= lo) continue;
      const double width = xr - xl;
      const double right_part = (hi * hi - lo * lo) / (2.0 * width);
      p.mass[j] += pieces[m].value * ((hi - lo) - right_part);
      p.mass[j + 1] += pieces[m].value * right_part;
    }
  }
  return p;
}

// Number of negative pivots of K - sigma M (Sylvester inertia).
int negative_count(const Pencil& p, double sigma) {
  const double off2 = p.stiff_off * p.stiff_off;
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    const double d = p.stiff_diag[i] - sigma * p.mass[i];
    q = i == 0 ? d : d - off2 / q;
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

// Solves (K - sigma M) y = rhs with the Thomas algorithm.
std::vector<double> solve_shifted(const Pencil& p, double sigma, const std::vector<double>& rhs) {
  const std::size_t n = rhs.size();
  std::vector<double> c(n), d(n), y(n);
  const double e = p.stiff_off;
  double denom = p.stiff_diag[0] - sigma * p.mass[0];
  c[0] = e / denom;
  d[0] = rhs[0] / denom;
  for (std::size_t i = 1; i < n; ++i) {
    denom = p.stiff_diag[i] - sigma * p.mass[i] - e * c[i - 1];
    c[i] = e / denom;
    d[i] = (rhs[i] - e * d[i - 1]) / denom;
  }
  y[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) y[i] = d[i] - c[i] * y[i + 1];
  return y;
}

struct RayleighParts {
  double numerator;
  double denominator;
};

RayleighParts rayleigh(const Pencil& p, const std::vector<double>& x) {
  double num = 0.0;
  double den = 0.0;
  // Difference form of x^T K x; expanding the tridiagonal product cancels badly.
  const double inv_h = -p.stiff_off;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double d = x[i + 1] - x[i];
    num += inv_h * d * d;
  }
  num += p.beta_left * x.front() * x.front() + p.beta_right * x.back() * x.back();
  for (std::size_t i = 0; i < x.size(); ++i) den += p.mass[i] * x[i] * x[i];
  return {num, den};
}

}  // namespace

double fd_eigenvalue_single(const RobinProblem1D& problem, int nodes) {
  if (nodes < 100) throw Error(ErrorKind::InvalidArgument, "finite differences need >= 100 nodes");
  const Pencil pencil = assemble(problem, nodes);

  double hi = 1.0;
  while (negative_count(pencil, hi) == 0) {
    hi *= 2.0;
    if (hi > 1e12) throw Error(ErrorKind::NoPositiveEigenpair, "no positive eigenvalue below 1e12");
  }
  double lo = 0.0;
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (negative_count(pencil, mid) == 0) lo = mid;
    else hi = mid;
  }

  // Shifted inverse iteration from slightly below the bracket, so the shifted
  // matrix stays well away from singular.
  const double shift = lo * (1.0 - 1e-7);
  std::vector<double> x(pencil.mass.size(), 1.0);
  double lambda = 0.5 * (lo + hi);
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    std::vector<double> rhs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = pencil.mass[i] * x[i];
    x = solve_shifted(pencil, shift, rhs);
    double norm = 0.0;
    for (double v : x) norm = std::max(norm, std::abs(v));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw Error(ErrorKind::IterationDivergence, "inverse iteration produced a degenerate vector");
    }
    for (double& v : x) v /= norm;
    const RayleighParts parts = rayleigh(pencil, x);
    const double next = parts.numerator / parts.denominator;
    if (std::abs(next - lambda) <= 1e-12 * std::abs(next)) {
      lambda = next;
      converged = true;
      break;
    }
    lambda = next;
  }
  if (!converged) throw Error(ErrorKind::IterationDivergence, "inverse iteration did not converge");

  const bool positive = std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0; });
  const bool negative = std::all_of(x.begin(), x.end(), [](double v) { return v < 0.0; });
  if ((!positive && !negative) || !(rayleigh(pencil, x).denominator > 0.0) || !(lambda > 0.0)) {
    throw Error(ErrorKind::NoPositiveEigenpair, "lowest positive eigenvector is not one-signed");
  }
  return lambda;
}

double fd_eigenvalue(const RobinProblem1D& problem, int nodes) {
  const double coarse = fd_eigenvalue_single(problem, nodes);
  const double fine = fd_eigenvalue_single(problem, 2 * nodes - 1);
  return (4.0 * fine - coarse) / 3.0;
}

std::vector<RobinProblem1D> random_configurations(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> c_dist(0.1, 0.6);
  std::uniform_real_distribution<double> kappa_dist(0.5, 4.0);
  std::uniform_real_distribution<double> beta_dist(0.1, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<RobinProblem1D> out;
  out.reserve(count);
  const Interval domain(0.0, 1.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double c = c_dist(rng);
    const double kappa = kappa_dist(rng);
    const double beta_left = beta_dist(rng);
    const double beta_right = beta_dist(rng);
    const double s = unit(rng) * (1.0 - c);
    out.emplace_back(BangBangWeight(domain, kappa, {Interval(s, s + c)}), beta_left, beta_right);
  }
  return out;
}

double rayleigh_quotient_radial(const ShellProblem& sp, double lambda, int points_per_piece,
                                const OdeOptions& options) {
  if (points_per_piece < 3) points_per_piece = 3;
  if (points_per_piece % 2 == 0) ++points_per_piece;
  const auto pieces = sp.weight_r.pieces();
  std::vector<double> radii;
  for (const auto& piece : pieces) {
    for (int i = 0; i < points_per_piece; ++i) {
      const double r = i + 1 == points_per_piece
                           ? piece.span.b
                           : piece.span.a + piece.span.length() * i / (points_per_piece - 1);
      if (radii.empty() || r > radii.back()) radii.push_back(r);
    }
  }
  const auto samples = radial_profile(sp, lambda, radii, options);
  auto jac = [&](double r) { return std::pow(r, sp.n - 1); };

  double grad = 0.0;
  double weighted = 0.0;
  std::size_t offset = 0;
  for (const auto& piece : pieces) {
    const int m = points_per_piece - 1;
    const double h = piece.span.length() / m;
    for (int i = 0; i <= m; ++i) {
      const auto& s = samples[offset + static_cast<std::size_t>(i)];
      const double w = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      grad += w * h / 3.0 * s.du * s.du * jac(s.x);
      weighted += w * h / 3.0 * piece.value * s.u * s.u * jac(s.x);
    }
    offset += static_cast<std::size_t>(m);
  }
  const auto& first = samples.front();
  const auto& last = samples.back();
  const double boundary = sp.beta * (first.u * first.u * jac(sp.r1) + last.u * last.u * jac(sp.r2));
  return (grad + boundary) / weighted;
}

bool argmin_matches(const SweepResult& sweep, const OptimalSetPrediction& prediction,
                    double cells) {
  const double slack = cells * sweep.grid_spacing * (1.0 + 1e-9);
  const double at = sweep.argmin_anchor;
  if (prediction.regime == Regime::Critical && prediction.family) {
    const auto& range = prediction.family->anchor_range;
    return at >= range.a - slack && at <= range.b + slack;
  }
  return std::any_of(prediction.sets.begin(), prediction.sets.end(),
                     [&](const Interval& s) { return std::abs(at - s.a) <= slack; });
}

}  // namespace robineig
