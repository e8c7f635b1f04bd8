#pragma once

#include <span>
#include <string>
#include <vector>

namespace robineig {

/// Open interval (a, b) with a < b. Used both for problem domains and for the
/// pieces of the favourable set E.
struct Interval {
  double a = 0.0;
  double b = 1.0;

  Interval() = default;
  Interval(double left, double right);

  double length() const noexcept { return b - a; }
  double midpoint() const noexcept { return 0.5 * (a + b); }
  bool contains(double x) const noexcept { return a < x && x < b; }
  /// Closed containment with an absolute slack, for predicted sets.
  bool contains(const Interval& other, double slack = 0.0) const noexcept {
    return other.a >= a - slack && other.b <= b + slack;
  }
  Interval shifted(double offset) const { return {a + offset, b + offset}; }
};

/// Constant-weight piece of a bang-bang profile.
struct WeightPiece {
  Interval span;
  double value;
};

/// m = kappa on the union of `segments`, -1 elsewhere in `domain`.
///
/// Segments are stored sorted and must be pairwise disjoint and inside the
/// domain; their total length lies strictly between 0 and |domain|, so the
/// weight always changes sign. Evaluation uses right limits: a segment is
/// treated as [s, e) for point queries.
class BangBangWeight {
 public:
  BangBangWeight(Interval domain, double kappa, std::vector<Interval> segments);

  const Interval& domain() const noexcept { return domain_; }
  double kappa() const noexcept { return kappa_; }
  std::span<const Interval> segments() const noexcept { return segments_; }

  double evaluate(double x) const noexcept;
  double total_length() const noexcept;
  /// Maximal constant pieces covering the domain, left to right.
  std::vector<WeightPiece> pieces() const;

  BangBangWeight translated(double offset) const;
  /// Image under the increasing affine map sending domain() onto `target`.
  BangBangWeight affinely_mapped(const Interval& target) const;
  BangBangWeight with_segments(std::vector<Interval> segments) const;

 private:
  Interval domain_;
  double kappa_;
  std::vector<Interval> segments_;
};

/// Bounds defining the admissible weight class: -1 <= m <= kappa and
/// mean(m) <= -m0, with Robin coefficient beta >= 0.
struct AdmissibilityParams {
  double m0 = 0.5;
  double kappa = 1.0;
  double beta = 0.0;

  /// Throws InvalidArgument unless m0 lies in (-kappa, 1) for beta > 0 and in
  /// (0, 1) for beta = 0.
  void validate() const;
  /// Saturating volume fraction c = (1 - m0) / (1 + kappa).
  double volume_fraction() const noexcept { return (1.0 - m0) / (1.0 + kappa); }
};

inline constexpr double kAdmissibilitySlack = 1e-12;

double weight_mean(const BangBangWeight& w) noexcept;

struct AdmissibilityCheck {
  bool admissible = false;
  double mean = 0.0;
  bool constraint_active = false;
  std::string diagnostic;
};

AdmissibilityCheck check_admissible(const BangBangWeight& w, const AdmissibilityParams& p);

}  // namespace robineig
