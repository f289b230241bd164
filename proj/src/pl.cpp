#include "absconv/pl.hpp"

#include <algorithm>
#include <stdexcept>

namespace absconv {

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values,
                       std::vector<Rational> slopes)
    : bps_(std::move(breakpoints)), vals_(std::move(values)), slopes_(std::move(slopes)) {
  if (slopes_.size() != bps_.size() + 1)
    throw std::logic_error("piecewise-linear function: slope count mismatch");
  if (vals_.size() != bps_.size())
    throw std::logic_error("piecewise-linear function: value count mismatch");
  for (std::size_t i = 1; i < bps_.size(); ++i) {
    if (!(bps_[i - 1] < bps_[i]))
      throw std::logic_error("breakpoints not strictly increasing");
    if (vals_[i] != vals_[i - 1] + slopes_[i] * (bps_[i] - bps_[i - 1]))
      throw std::logic_error("breakpoint values inconsistent with slopes");
  }
  if (bps_.empty()) {
    origin_val_ = Rational(0);  // linear(); factory fills the real anchor
    return;
  }
  // merge adjacent segments of equal slope
  std::vector<Rational> b2, v2, s2;
  s2.push_back(slopes_[0]);
  for (std::size_t i = 0; i < bps_.size(); ++i) {
    if (slopes_[i + 1] == s2.back()) continue;  // breakpoint i is redundant
    b2.push_back(bps_[i]);
    v2.push_back(vals_[i]);
    s2.push_back(slopes_[i + 1]);
  }
  if (b2.empty()) {
    // everything merged into a single line
    Rational s = s2[0];
    origin_val_ = vals_[0] - s * bps_[0];
    bps_.clear();
    vals_.clear();
    slopes_ = {s};
    return;
  }
  bps_ = std::move(b2);
  vals_ = std::move(v2);
  slopes_ = std::move(s2);
  origin_val_ = Rational(0);
}

PLFunction PLFunction::constant(const Rational& c) { return linear(Rational(0), c); }

PLFunction PLFunction::linear(const Rational& slope, const Rational& value_at_zero) {
  PLFunction f({}, {}, {slope});
  f.origin_val_ = value_at_zero;
  return f;
}

Rational PLFunction::value_at(const Rational& x) const {
  if (bps_.empty()) return origin_val_ + slopes_[0] * x;
  if (x <= bps_.front()) return vals_.front() + slopes_.front() * (x - bps_.front());
  if (x >= bps_.back()) return vals_.back() + slopes_.back() * (x - bps_.back());
  auto it = std::upper_bound(bps_.begin(), bps_.end(), x);
  std::size_t k = static_cast<std::size_t>(it - bps_.begin());  // bps_[k-1] < x < bps_[k]
  return vals_[k - 1] + slopes_[k] * (x - bps_[k - 1]);
}

Rational PLFunction::slope_at(const Rational& x) const {
  auto it = std::upper_bound(bps_.begin(), bps_.end(), x);
  return slopes_[static_cast<std::size_t>(it - bps_.begin())];
}

std::string PLFunction::to_string() const {
  if (bps_.empty())
    return "line(slope=" + slopes_[0].to_string() + ", at0=" + origin_val_.to_string() + ")";
  std::string s = "pl{";
  for (std::size_t i = 0; i < bps_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + bps_[i].to_string() + ", " + vals_[i].to_string() + ")";
  }
  s += "; slopes ";
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    if (i) s += ",";
    s += slopes_[i].to_string();
  }
  return s + "}";
}

bool operator==(const PLFunction& a, const PLFunction& b) {
  if (a.bps_ != b.bps_ || a.slopes_ != b.slopes_) return false;
  if (a.bps_.empty()) return a.origin_val_ == b.origin_val_;
  return a.vals_.front() == b.vals_.front();
}

Rational pl_eval(const PLFunction& f, const Rational& x) { return f.value_at(x); }

PLFunction pl_combine(const std::vector<std::pair<Rational, PLFunction>>& terms,
                      const Rational& offset) {
  std::vector<Rational> bps;
  for (const auto& [c, f] : terms) {
    (void)c;
    bps.insert(bps.end(), f.breakpoints().begin(), f.breakpoints().end());
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  auto combined_at = [&](const Rational& x) {
    Rational v = offset;
    for (const auto& [c, f] : terms) v += c * f.value_at(x);
    return v;
  };
  auto combined_slope_at = [&](const Rational& x) {
    Rational s(0);
    for (const auto& [c, f] : terms) s += c * f.slope_at(x);
    return s;
  };

  if (bps.empty()) {
    Rational s(0), v0 = offset;
    for (const auto& [c, f] : terms) {
      s += c * f.slopes()[0];
      v0 += c * f.value_at(Rational(0));
    }
    return PLFunction::linear(s, v0);
  }

  std::vector<Rational> vals, slopes;
  vals.reserve(bps.size());
  for (const Rational& b : bps) vals.push_back(combined_at(b));
  slopes.push_back(combined_slope_at(bps.front() - Rational(1)));
  for (std::size_t k = 1; k < bps.size(); ++k)
    slopes.push_back(combined_slope_at((bps[k - 1] + bps[k]) / Rational(2)));
  slopes.push_back(combined_slope_at(bps.back() + Rational(1)));
  return PLFunction(std::move(bps), std::move(vals), std::move(slopes));
}

PLFunction pl_negate(const PLFunction& f) {
  return pl_combine({{Rational(-1), f}}, Rational(0));
}

namespace {

// Zeros of d that are not already among its breakpoints.
std::vector<Rational> interior_roots(const PLFunction& d) {
  std::vector<Rational> roots;
  const auto& b = d.breakpoints();
  const auto& v = d.values();
  const auto& s = d.slopes();
  if (b.empty()) {
    if (!s[0].is_zero()) {
      Rational origin = d.value_at(Rational(0));
      roots.push_back(-origin / s[0]);
    }
    return roots;
  }
  if (!s.front().is_zero()) {
    Rational r = b.front() - v.front() / s.front();
    if (r < b.front()) roots.push_back(r);
  }
  for (std::size_t k = 1; k < b.size(); ++k) {
    if (v[k - 1].sign() * v[k].sign() < 0) {
      Rational r = b[k - 1] - v[k - 1] / s[k];
      roots.push_back(r);
    }
  }
  if (!s.back().is_zero()) {
    Rational r = b.back() - v.back() / s.back();
    if (r > b.back()) roots.push_back(r);
  }
  return roots;
}

PLFunction envelope2(const PLFunction& f, const PLFunction& g) {
  if (f == g) return f;
  PLFunction d = pl_combine({{Rational(1), f}, {Rational(-1), g}}, Rational(0));

  std::vector<Rational> cands = f.breakpoints();
  cands.insert(cands.end(), g.breakpoints().begin(), g.breakpoints().end());
  for (const Rational& r : interior_roots(d)) cands.push_back(r);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  auto winner_at = [&](const Rational& rep) -> const PLFunction& {
    return d.value_at(rep) >= Rational(0) ? f : g;
  };

  if (cands.empty()) {
    // both linear, no crossing
    return winner_at(Rational(0));
  }

  std::vector<Rational> vals, slopes;
  vals.reserve(cands.size());
  for (const Rational& c : cands) {
    Rational fv = f.value_at(c), gv = g.value_at(c);
    vals.push_back(fv >= gv ? fv : gv);
  }
  {
    Rational rep = cands.front() - Rational(1);
    slopes.push_back(winner_at(rep).slope_at(rep));
  }
  for (std::size_t k = 1; k < cands.size(); ++k) {
    Rational rep = (cands[k - 1] + cands[k]) / Rational(2);
    slopes.push_back(winner_at(rep).slope_at(rep));
  }
  {
    Rational rep = cands.back() + Rational(1);
    slopes.push_back(winner_at(rep).slope_at(rep));
  }
  return PLFunction(std::move(cands), std::move(vals), std::move(slopes));
}

}  // namespace

PLFunction pl_upper_envelope(const std::vector<PLFunction>& fs) {
  if (fs.empty()) throw EmptyEnvelope();
  PLFunction env = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) env = envelope2(env, fs[i]);
  return env;
}

bool pl_dominates(const PLFunction& f, const PLFunction& g) {
  PLFunction d = pl_combine({{Rational(1), f}, {Rational(-1), g}}, Rational(0));
  if (d.is_linear())
    return d.slopes()[0].is_zero() && d.value_at(Rational(0)) >= Rational(0);
  if (d.left_slope() > Rational(0) || d.right_slope() < Rational(0)) return false;
  for (const Rational& v : d.values())
    if (v < Rational(0)) return false;
  return true;
}

IntervalSet pl_strict_above_region(const PLFunction& f, const PLFunction& g) {
  PLFunction d = pl_combine({{Rational(1), f}, {Rational(-1), g}}, Rational(0));
  std::vector<Interval> parts;
  const auto& b = d.breakpoints();
  const auto& v = d.values();
  const auto& s = d.slopes();

  if (b.empty()) {
    Rational origin = d.value_at(Rational(0));
    if (s[0].is_zero()) {
      if (origin > Rational(0)) parts.push_back(Interval::all_reals());
    } else {
      Rational r = -origin / s[0];
      if (s[0] > Rational(0))
        parts.push_back(Interval::above(r, false));
      else
        parts.push_back(Interval::below(r, false));
    }
    return IntervalSet(parts);
  }

  // left tail (-inf, b0]
  {
    const Rational& v0 = v.front();
    const Rational& sl = s.front();
    if (sl.is_zero()) {
      if (v0 > Rational(0)) parts.push_back(Interval::below(b.front(), true));
    } else if (sl > Rational(0)) {
      if (v0 > Rational(0)) {
        Rational r = b.front() - v0 / sl;
        parts.push_back(Interval::segment(r, false, b.front(), true));
      }
    } else {
      if (v0 > Rational(0))
        parts.push_back(Interval::below(b.front(), true));
      else if (v0.is_zero())
        parts.push_back(Interval::below(b.front(), false));
      else {
        Rational r = b.front() - v0 / sl;
        parts.push_back(Interval::below(r, false));
      }
    }
  }
  // middle pieces [b_{k-1}, b_k]
  for (std::size_t k = 1; k < b.size(); ++k) {
    const Rational &va = v[k - 1], &vb = v[k];
    const Rational &a = b[k - 1], &bb = b[k];
    int sa = va.sign(), sb = vb.sign();
    if (sa > 0 && sb > 0) {
      parts.push_back(Interval::closed(a, bb));
    } else if (sa > 0 && sb == 0) {
      parts.push_back(Interval::segment(a, true, bb, false));
    } else if (sa == 0 && sb > 0) {
      parts.push_back(Interval::segment(a, false, bb, true));
    } else if (sa > 0 && sb < 0) {
      Rational r = a - va / s[k];
      parts.push_back(Interval::segment(a, true, r, false));
    } else if (sa < 0 && sb > 0) {
      Rational r = a - va / s[k];
      parts.push_back(Interval::segment(r, false, bb, true));
    }
  }
  // right tail [b_last, +inf)
  {
    const Rational& vn = v.back();
    const Rational& sr = s.back();
    if (sr.is_zero()) {
      if (vn > Rational(0)) parts.push_back(Interval::above(b.back(), true));
    } else if (sr < Rational(0)) {
      if (vn > Rational(0)) {
        Rational r = b.back() - vn / sr;
        parts.push_back(Interval::segment(b.back(), true, r, false));
      }
    } else {
      if (vn > Rational(0))
        parts.push_back(Interval::above(b.back(), true));
      else if (vn.is_zero())
        parts.push_back(Interval::above(b.back(), false));
      else {
        Rational r = b.back() - vn / sr;
        parts.push_back(Interval::above(r, false));
      }
    }
  }
  return IntervalSet(parts);
}

PLSupremum pl_supremum(const PLFunction& f) {
  if (f.is_linear()) {
    if (f.slopes()[0].is_zero())
      return {ExtReal(f.value_at(Rational(0))), Rational(0)};
    return {ExtReal::pos_infinity(), std::nullopt};
  }
  if (f.left_slope() < Rational(0) || f.right_slope() > Rational(0))
    return {ExtReal::pos_infinity(), std::nullopt};
  const auto& b = f.breakpoints();
  const auto& v = f.values();
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) {
      best = i;
    } else if (v[i] == v[best]) {
      if (b[i].abs() < b[best].abs() || (b[i].abs() == b[best].abs() && b[i] < b[best]))
        best = i;
    }
  }
  return {ExtReal(v[best]), b[best]};
}

PLSupremum pl_infimum(const PLFunction& f) {
  PLSupremum s = pl_supremum(pl_negate(f));
  return {-s.value, s.attained_at};
}

PLFunction pl_translate(const PLFunction& f, const Rational& shift) {
  if (f.is_linear()) return PLFunction::linear(f.slopes()[0], f.value_at(shift));
  std::vector<Rational> bps;
  bps.reserve(f.breakpoints().size());
  for (const Rational& b : f.breakpoints()) bps.push_back(b - shift);
  return PLFunction(std::move(bps), f.values(), f.slopes());
}

PLSupremum pl_supremum_over(const PLFunction& f, const IntervalSet& s) {
  std::optional<ExtReal> best;
  std::optional<Rational> best_at;
  auto consider = [&](const ExtReal& val, const std::optional<Rational>& at) {
    if (!best || val > *best) {
      best = val;
      best_at = at;
    } else if (val == *best && at && !best_at) {
      best_at = at;
    } else if (val == *best && at && best_at) {
      if (at->abs() < best_at->abs() || (at->abs() == best_at->abs() && *at < *best_at))
        best_at = at;
    }
  };

  for (const Interval& part : s.parts()) {
    if (part.lo.is_neg_inf() && f.left_slope() < Rational(0))
      return {ExtReal::pos_infinity(), std::nullopt};
    if (part.hi.is_pos_inf() && f.right_slope() > Rational(0))
      return {ExtReal::pos_infinity(), std::nullopt};

    if (part.lo.is_neg_inf()) {
      // flat or downhill tail: a plateau point inside the part attains the limit
      Rational ref = f.breakpoints().empty() ? Rational(0) : f.breakpoints().front();
      Rational p = ref;
      if (part.hi.is_finite()) {
        Rational h = part.hi.finite_value();
        if (h < p || (h == p && !part.hi_closed)) p = h - Rational(1);
      }
      consider(ExtReal(f.value_at(p)), p);
    }
    if (part.hi.is_pos_inf()) {
      Rational ref = f.breakpoints().empty() ? Rational(0) : f.breakpoints().back();
      Rational p = ref;
      if (part.lo.is_finite()) {
        Rational l = part.lo.finite_value();
        if (l > p || (l == p && !part.lo_closed)) p = l + Rational(1);
      }
      consider(ExtReal(f.value_at(p)), p);
    }
    if (part.lo.is_finite()) {
      Rational l = part.lo.finite_value();
      consider(ExtReal(f.value_at(l)),
               part.lo_closed ? std::optional<Rational>(l) : std::nullopt);
    }
    if (part.hi.is_finite()) {
      Rational h = part.hi.finite_value();
      consider(ExtReal(f.value_at(h)),
               part.hi_closed ? std::optional<Rational>(h) : std::nullopt);
    }
    for (const Rational& b : f.breakpoints()) {
      if (ExtReal(b) > part.lo && ExtReal(b) < part.hi) consider(ExtReal(f.value_at(b)), b);
    }
  }
  if (!best) return {ExtReal::neg_infinity(), std::nullopt};
  return {*best, best_at};
}

}  // namespace absconv
