#pragma once

#include <string>
#include <vector>

#include "absconv/rational.hpp"

namespace absconv {

/// One interval of the rational line.  Infinite endpoints are always open;
/// a degenerate interval (lo == hi) is a point and has both endpoints closed.
struct Interval {
  ExtReal lo;
  ExtReal hi;
  bool lo_closed = false;
  bool hi_closed = false;

  Interval(ExtReal l, ExtReal h, bool lc, bool hc);

  static Interval all_reals();
  static Interval point(const Rational& x);
  static Interval open(const Rational& a, const Rational& b);
  static Interval closed(const Rational& a, const Rational& b);
  static Interval segment(const Rational& a, bool ac, const Rational& b, bool bc);
  static Interval below(const Rational& b, bool closed);  // (-inf, b) or (-inf, b]
  static Interval above(const Rational& a, bool closed);  // (a, +inf) or [a, +inf)

  bool contains(const Rational& x) const;
  bool is_point() const { return lo == hi; }

  /// A canonical interior point: midpoint when bounded, one unit past the
  /// finite endpoint when half-infinite, 0 for the whole line.
  Rational representative() const;

  std::string to_string() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
           a.hi_closed == b.hi_closed;
  }
};

/// Canonical finite union of intervals: parts pairwise disjoint, unmergeable,
/// sorted by lower endpoint.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  static IntervalSet empty_set() { return IntervalSet(); }
  static IntervalSet all_reals() { return IntervalSet({Interval::all_reals()}); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& x) const;

  static IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

  std::string to_string() const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const IntervalSet& a, const IntervalSet& b) {
    return !(a == b);
  }

 private:
  std::vector<Interval> parts_;
};

}  // namespace absconv
