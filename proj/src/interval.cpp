#include "absconv/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace absconv {

Interval::Interval(ExtReal l, ExtReal h, bool lc, bool hc)
    : lo(l), hi(h), lo_closed(lc), hi_closed(hc) {
  if (hi < lo) throw std::invalid_argument("interval with hi < lo");
  if (!lo.is_finite() && lo_closed) throw std::invalid_argument("closed infinite endpoint");
  if (!hi.is_finite() && hi_closed) throw std::invalid_argument("closed infinite endpoint");
  if (lo == hi && !(lo_closed && hi_closed))
    throw std::invalid_argument("degenerate interval must be a closed point");
}

Interval Interval::all_reals() {
  return Interval(ExtReal::neg_infinity(), ExtReal::pos_infinity(), false, false);
}
Interval Interval::point(const Rational& x) { return Interval(x, x, true, true); }
Interval Interval::open(const Rational& a, const Rational& b) {
  return Interval(a, b, false, false);
}
Interval Interval::closed(const Rational& a, const Rational& b) {
  return Interval(a, b, true, true);
}
Interval Interval::segment(const Rational& a, bool ac, const Rational& b, bool bc) {
  return Interval(a, b, ac, bc);
}
Interval Interval::below(const Rational& b, bool closed) {
  return Interval(ExtReal::neg_infinity(), b, false, closed);
}
Interval Interval::above(const Rational& a, bool closed) {
  return Interval(a, ExtReal::pos_infinity(), closed, false);
}

bool Interval::contains(const Rational& x) const {
  ExtReal v{x};
  if (v < lo || v > hi) return false;
  if (v == lo && !lo_closed) return false;
  if (v == hi && !hi_closed) return false;
  return true;
}

Rational Interval::representative() const {
  if (lo.is_finite() && hi.is_finite()) {
    if (lo == hi) return lo.finite_value();
    return (lo.finite_value() + hi.finite_value()) / Rational(2);
  }
  if (hi.is_finite()) return hi.finite_value() - Rational(1);
  if (lo.is_finite()) return lo.finite_value() + Rational(1);
  return Rational(0);
}

std::string Interval::to_string() const {
  if (is_point()) return "{" + lo.finite_value().to_string() + "}";
  std::string s;
  s += lo_closed ? "[" : "(";
  s += lo.to_string();
  s += ", ";
  s += hi.to_string();
  s += hi_closed ? "]" : ")";
  return s;
}

namespace {

// Order for sweeping: by lower endpoint, closed endpoints first.
bool starts_before(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  if (a.lo_closed != b.lo_closed) return a.lo_closed;
  if (a.hi != b.hi) return a.hi < b.hi;
  return a.hi_closed && !b.hi_closed;
}

// True when a ends at or beyond the start of b, counting touching endpoints
// where at least one side is closed.
bool can_merge(const Interval& a, const Interval& b) {
  if (b.lo < a.hi) return true;
  if (b.lo == a.hi) return a.hi_closed || b.lo_closed;
  return false;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), starts_before);
  for (const Interval& p : parts) {
    if (!parts_.empty() && can_merge(parts_.back(), p)) {
      Interval& cur = parts_.back();
      if (p.hi > cur.hi) {
        cur = Interval(cur.lo, p.hi, cur.lo_closed, p.hi_closed);
      } else if (p.hi == cur.hi && p.hi_closed && !cur.hi_closed) {
        cur = Interval(cur.lo, cur.hi, cur.lo_closed, true);
      }
    } else {
      parts_.push_back(p);
    }
  }
}

bool IntervalSet::contains(const Rational& x) const {
  for (const Interval& p : parts_)
    if (p.contains(x)) return true;
  return false;
}

IntervalSet IntervalSet::intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  for (const Interval& i : a.parts_) {
    for (const Interval& j : b.parts_) {
      ExtReal lo = i.lo;
      bool lc = i.lo_closed;
      if (j.lo > lo) {
        lo = j.lo;
        lc = j.lo_closed;
      } else if (j.lo == lo) {
        lc = lc && j.lo_closed;
      }
      ExtReal hi = i.hi;
      bool hc = i.hi_closed;
      if (j.hi < hi) {
        hi = j.hi;
        hc = j.hi_closed;
      } else if (j.hi == hi) {
        hc = hc && j.hi_closed;
      }
      if (hi < lo) continue;
      if (lo == hi && !(lc && hc)) continue;
      out.push_back(Interval(lo, hi, lc, hc));
    }
  }
  return IntervalSet(out);
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += " U ";
    s += parts_[i].to_string();
  }
  return s;
}

}  // namespace absconv
