#pragma once

#include <optional>
#include <string>
#include <vector>

namespace maxalg {

/// Comparison tolerance for cross-route value checks (sampled or
/// transcendental results against exact arithmetic). Algebraic identities on
/// exactly representable inputs are compared with ==, never with this.
struct Tolerance {
  double rel_eq = 1e-12;
  bool close(double a, double b) const;
};

/// One interval of nonnegative reals with per-endpoint closure flags.
/// Invariant: lo <= hi, and a degenerate interval (lo == hi) is closed on
/// both ends. Empty sets are represented by absence (std::optional or an
/// empty IntervalSet), never by an Interval value.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval closed(double lo, double hi);
  static Interval singleton(double v) { return closed(v, v); }
  /// (lo, hi], the shape taken by achievable sets with a zero diagonal.
  static Interval half_open_below(double lo, double hi);

  bool is_singleton() const { return lo == hi; }
  bool contains(double x) const;
  /// Membership with slack rel_eq on both endpoints; closure flags ignored.
  bool contains_approx(double x, const Tolerance& tol) const;
  bool operator==(const Interval&) const = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Finite union of intervals kept normalized: parts are sorted, pairwise
/// disjoint and non-adjacent (no two parts can be merged).
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }
  bool contains(double x) const;
  bool subset_of(const IntervalSet& other) const;
  double inf() const;  // nonempty only
  double sup() const;  // nonempty only
  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

/// Max-algebraic convex hull: the smallest closed interval containing the
/// argument. Requires a nonempty argument.
Interval max_convex_hull(const IntervalSet& s);
Interval max_convex_hull(const std::vector<double>& values);

}  // namespace maxalg
