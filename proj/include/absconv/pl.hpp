#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absconv/interval.hpp"
#include "absconv/rational.hpp"

namespace absconv {

class EmptyEnvelope : public std::invalid_argument {
 public:
  EmptyEnvelope() : std::invalid_argument("empty-envelope") {}
};

/// Continuous piecewise-linear function on the whole rational line with
/// linear tails, kept in canonical form: breakpoints strictly increasing and
/// no two adjacent segments with equal slope.  Structural equality of
/// canonical forms is pointwise equality on the line.
class PLFunction {
 public:
  /// From breakpoints, the exact values at those breakpoints, and the
  /// breakpoints.size()+1 slopes (left tail, inner segments, right tail).
  /// Values must be consistent with the slopes; canonicalizes.
  PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values,
             std::vector<Rational> slopes);

  static PLFunction constant(const Rational& c);
  static PLFunction linear(const Rational& slope, const Rational& value_at_zero);

  const std::vector<Rational>& breakpoints() const { return bps_; }
  const std::vector<Rational>& values() const { return vals_; }
  const std::vector<Rational>& slopes() const { return slopes_; }
  Rational left_slope() const { return slopes_.front(); }
  Rational right_slope() const { return slopes_.back(); }
  bool is_linear() const { return bps_.empty(); }
  /// Value at the anchor: first breakpoint, or 0 for a breakpoint-free line.
  Rational anchor_value() const { return bps_.empty() ? origin_val_ : vals_.front(); }

  Rational value_at(const Rational& x) const;
  /// Slope at a point that is not a breakpoint.
  Rational slope_at(const Rational& x) const;

  std::string to_string() const;

  friend bool operator==(const PLFunction& a, const PLFunction& b);
  friend bool operator!=(const PLFunction& a, const PLFunction& b) { return !(a == b); }

 private:
  std::vector<Rational> bps_;
  std::vector<Rational> vals_;  // values at breakpoints
  std::vector<Rational> slopes_;
  Rational origin_val_;  // value at 0, used only when bps_ is empty
};

struct PLSupremum {
  ExtReal value;
  std::optional<Rational> attained_at;
};

Rational pl_eval(const PLFunction& f, const Rational& x);

/// Exact linear combination sum(coeff_i * f_i) + offset, canonical.
PLFunction pl_combine(const std::vector<std::pair<Rational, PLFunction>>& terms,
                      const Rational& offset);

PLFunction pl_negate(const PLFunction& f);

/// Pointwise maximum of a nonempty collection; throws EmptyEnvelope otherwise.
PLFunction pl_upper_envelope(const std::vector<PLFunction>& fs);

/// True iff f(x) >= g(x) for every real x.
bool pl_dominates(const PLFunction& f, const PLFunction& g);

/// Exact {x : f(x) > g(x)} as a canonical interval set (open at crossings).
IntervalSet pl_strict_above_region(const PLFunction& f, const PLFunction& g);

/// Supremum over the whole line; +inf iff a tail points upward.  When finite,
/// a witness breakpoint of smallest |x| (then smallest x) is returned.
PLSupremum pl_supremum(const PLFunction& f);
PLSupremum pl_infimum(const PLFunction& f);

/// x -> f(x + shift).
PLFunction pl_translate(const PLFunction& f, const Rational& shift);

/// Exact supremum of f over an interval set (+inf when unbounded above on an
/// unbounded part).  The witness, when present, lies in the set.
PLSupremum pl_supremum_over(const PLFunction& f, const IntervalSet& s);

}  // namespace absconv
