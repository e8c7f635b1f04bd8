#include "robineig/root_search.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "robineig/errors.hpp"

namespace robineig {

PrincipalRoot find_principal_root(const std::function<ShotSample(double)>& shoot, double floor,
                                  const SearchOptions& options) {
  if (!(options.step_factor > 1.0) || !(options.lambda_start > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "search needs step_factor > 1 and lambda_start > 0");
  }
  double lo = std::max(options.lambda_start, floor);
  ShotSample f_lo = shoot(lo);
  while (lo < options.lambda_cap) {
    const double hi = std::min(lo * options.step_factor, options.lambda_cap);
    const ShotSample f_hi = shoot(hi);
    const bool sign_change = (f_lo.residual <= 0.0) != (f_hi.residual <= 0.0) ||
                             f_hi.residual == 0.0;
    if (sign_change) {
      double a = lo;
      double b = hi;
      if (f_hi.residual != 0.0) {
        auto residual = [&](double lambda) { return shoot(lambda).residual; };
        auto tol = [rel = options.rel_tol](double x, double y) {
          return std::abs(y - x) <= rel * std::min(std::abs(x), std::abs(y));
        };
        std::uintmax_t max_iter = 300;
        const auto bracket = boost::math::tools::toms748_solve(residual, lo, hi, f_lo.residual,
                                                               f_hi.residual, tol, max_iter);
        a = bracket.first;
        b = bracket.second;
      }
      const ShotSample below = shoot(a);
      if (below.zero_count == 0) {
        return {0.5 * (a + b), a, b, below.zero_count};
      }
    }
    lo = hi;
    f_lo = f_hi;
  }
  std::ostringstream os;
  os << "no principal root below lambda cap " << options.lambda_cap;
  throw Error(ErrorKind::NoRootInRange, os.str());
}

}  // namespace robineig
