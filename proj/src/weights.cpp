#include "robineig/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "robineig/errors.hpp"

namespace robineig {

namespace {

std::string describe(const Interval& i) {
  std::ostringstream os;
  os << "(" << i.a << ", " << i.b << ")";
  return os.str();
}

}  // namespace

Interval::Interval(double left, double right) : a(left), b(right) {
  if (!(std::isfinite(left) && std::isfinite(right)) || !(left < right)) {
    throw Error(ErrorKind::InvalidArgument, "interval requires finite a < b, got " + describe(*this));
  }
}

BangBangWeight::BangBangWeight(Interval domain, double kappa, std::vector<Interval> segments)
    : domain_(domain), kappa_(kappa), segments_(std::move(segments)) {
  if (!(kappa_ > 0.0) || !std::isfinite(kappa_)) {
    throw Error(ErrorKind::InvalidArgument, "kappa must be positive");
  }
  std::sort(segments_.begin(), segments_.end(),
            [](const Interval& l, const Interval& r) { return l.a < r.a; });
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!domain_.contains(segments_[i])) {
      throw Error(ErrorKind::InvalidArgument,
                  "segment " + describe(segments_[i]) + " outside domain " + describe(domain_));
    }
    if (i > 0 && segments_[i].a < segments_[i - 1].b) {
      throw Error(ErrorKind::InvalidArgument, "segments overlap");
    }
  }
  const double total = total_length();
  if (!(total > 0.0) || !(total < domain_.length())) {
    throw Error(ErrorKind::NoSignChange,
                "favourable set must have measure strictly between 0 and |domain|");
  }
}

double BangBangWeight::evaluate(double x) const noexcept {
  for (const auto& s : segments_) {
    if (x >= s.a && x < s.b) return kappa_;
  }
  return -1.0;
}

double BangBangWeight::total_length() const noexcept {
  double total = 0.0;
  for (const auto& s : segments_) total += s.length();
  return total;
}

std::vector<WeightPiece> BangBangWeight::pieces() const {
  std::vector<WeightPiece> out;
  double cursor = domain_.a;
  auto push = [&](double left, double right, double value) {
    if (right <= left) return;
    if (!out.empty() && out.back().value == value) {
      out.back().span.b = right;
    } else {
      out.push_back({Interval(left, right), value});
    }
  };
  for (const auto& s : segments_) {
    push(cursor, s.a, -1.0);
    push(s.a, s.b, kappa_);
    cursor = s.b;
  }
  push(cursor, domain_.b, -1.0);
  return out;
}

BangBangWeight BangBangWeight::translated(double offset) const {
  std::vector<Interval> moved;
  moved.reserve(segments_.size());
  for (const auto& s : segments_) moved.push_back(s.shifted(offset));
  return BangBangWeight(domain_.shifted(offset), kappa_, std::move(moved));
}

BangBangWeight BangBangWeight::affinely_mapped(const Interval& target) const {
  const double scale = target.length() / domain_.length();
  auto map = [&](double x) { return target.a + (x - domain_.a) * scale; };
  std::vector<Interval> mapped;
  mapped.reserve(segments_.size());
  for (const auto& s : segments_) {
    // Clamp so rounding cannot push an endpoint-flush segment outside.
    mapped.emplace_back(std::max(target.a, map(s.a)), std::min(target.b, map(s.b)));
  }
  return BangBangWeight(target, kappa_, std::move(mapped));
}

BangBangWeight BangBangWeight::with_segments(std::vector<Interval> segments) const {
  return BangBangWeight(domain_, kappa_, std::move(segments));
}

void AdmissibilityParams::validate() const {
  if (!(kappa > 0.0)) throw Error(ErrorKind::InvalidArgument, "kappa must be positive");
  if (!(beta >= 0.0)) throw Error(ErrorKind::InvalidArgument, "beta must be nonnegative");
  if (beta > 0.0) {
    if (!(m0 > -kappa && m0 < 1.0)) {
      throw Error(ErrorKind::InvalidArgument, "m0 must lie in (-kappa, 1) when beta > 0");
    }
  } else if (!(m0 > 0.0 && m0 < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "m0 must lie in (0, 1) when beta = 0");
  }
}

double weight_mean(const BangBangWeight& w) noexcept {
  const double omega = w.domain().length();
  const double e = w.total_length();
  return (w.kappa() * e - (omega - e)) / omega;
}

AdmissibilityCheck check_admissible(const BangBangWeight& w, const AdmissibilityParams& p) {
  AdmissibilityCheck out;
  out.mean = weight_mean(w);
  std::ostringstream diag;
  bool ok = true;
  if (w.kappa() > p.kappa + kAdmissibilitySlack) {
    ok = false;
    diag << "weight upper value " << w.kappa() << " exceeds kappa " << p.kappa << "; ";
  }
  if (!(w.total_length() > 0.0)) {
    ok = false;
    diag << "favourable set has zero measure; ";
  }
  if (out.mean > -p.m0 + kAdmissibilitySlack) {
    ok = false;
    diag << "mean weight " << out.mean << " exceeds -m0 = " << -p.m0 << "; ";
  }
  out.admissible = ok;
  out.constraint_active = std::abs(out.mean + p.m0) <= kAdmissibilitySlack;
  out.diagnostic = diag.str();
  if (!out.diagnostic.empty()) out.diagnostic.resize(out.diagnostic.size() - 2);
  return out;
}

}  // namespace robineig
