#include "absconv/conjugate.hpp"

#include <stdexcept>

namespace absconv {

namespace {

// Sum used inside infimal convolutions of conjugates: +inf dominates, a split
// with an unreachable half is unreachable.
ExtReal epi_sum(const ExtReal& a, const ExtReal& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_infinity();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::neg_infinity();
  return a + b;
}

}  // namespace

ConjugateTable::ConjugateTable(FamilyRef family, std::vector<ExtReal> values,
                               std::vector<std::optional<Point>> witnesses,
                               std::vector<std::optional<std::pair<int, int>>> splits)
    : family_(std::move(family)),
      values_(std::move(values)),
      witnesses_(std::move(witnesses)),
      splits_(std::move(splits)) {
  if (values_.size() != family_->size())
    throw std::logic_error("conjugate table size mismatch");
  if (witnesses_.empty()) witnesses_.resize(values_.size());
  if (splits_.empty()) splits_.resize(values_.size());
  if (witnesses_.size() != values_.size() || splits_.size() != values_.size())
    throw std::logic_error("conjugate table column mismatch");
}

bool ConjugateTable::attained(int i) const {
  const ExtReal& v = values_.at(static_cast<std::size_t>(i));
  if (!v.is_finite()) return false;
  return witnesses_[static_cast<std::size_t>(i)].has_value() ||
         splits_[static_cast<std::size_t>(i)].has_value();
}

ConjugateTable conjugate(const TargetFunction& f, const FamilyRef& L) {
  if (f.domain() != L->domain())
    throw std::invalid_argument("conjugate across different domains");
  std::vector<ExtReal> values;
  std::vector<std::optional<Point>> witnesses;
  values.reserve(L->size());
  witnesses.reserve(L->size());

  for (const ElementaryFunction& u : L->members()) {
    if (L->domain().is_real_line()) {
      if (f.is_neg_inf()) {
        values.push_back(ExtReal::pos_infinity());
        witnesses.push_back(std::nullopt);
        continue;
      }
      PLFunction d = pl_combine({{Rational(1), u.pl()}, {Rational(-1), f.pl()}}, Rational(0));
      PLSupremum s = pl_supremum(d);
      values.push_back(s.value);
      if (s.attained_at)
        witnesses.push_back(point1(*s.attained_at));
      else
        witnesses.push_back(std::nullopt);
      continue;
    }
    // finite backend: sup over the effective domain
    std::optional<ExtReal> best;
    std::optional<Point> at;
    bool blew_up = false;
    for (std::size_t i = 0; i < L->domain().points.size(); ++i) {
      const ExtReal& fv = f.table()[i];
      if (fv.is_pos_inf()) continue;  // outside dom f
      if (fv.is_neg_inf()) {
        blew_up = true;
        break;
      }
      Rational cand = u.table()[i] - fv.finite_value();
      const Point& p = L->domain().points[i];
      if (!best || ExtReal(cand) > *best) {
        best = ExtReal(cand);
        at = p;
      } else if (ExtReal(cand) == *best && canonical_point_less(p, *at)) {
        at = p;
      }
    }
    if (blew_up) {
      values.push_back(ExtReal::pos_infinity());
      witnesses.push_back(std::nullopt);
    } else if (!best) {
      values.push_back(ExtReal::neg_infinity());  // sup over an empty domain
      witnesses.push_back(std::nullopt);
    } else {
      values.push_back(*best);
      witnesses.push_back(at);
    }
  }
  return ConjugateTable(L, std::move(values), std::move(witnesses));
}

ConjugateTable support_function(const PointSet& C, const FamilyRef& L) {
  if (C.domain() != L->domain())
    throw std::invalid_argument("support function across different domains");
  std::vector<ExtReal> values;
  std::vector<std::optional<Point>> witnesses;
  values.reserve(L->size());

  for (const ElementaryFunction& l : L->members()) {
    if (L->domain().is_real_line()) {
      PLSupremum s = pl_supremum_over(l.pl(), C.intervals());
      values.push_back(s.value);
      witnesses.push_back(s.attained_at ? std::optional<Point>(point1(*s.attained_at))
                                        : std::nullopt);
      continue;
    }
    std::optional<Rational> best;
    std::optional<Point> at;
    for (int i : C.indices()) {
      const Rational& v = l.table()[static_cast<std::size_t>(i)];
      const Point& p = L->domain().points[static_cast<std::size_t>(i)];
      if (!best || v > *best) {
        best = v;
        at = p;
      } else if (v == *best && canonical_point_less(p, *at)) {
        at = p;
      }
    }
    values.push_back(best ? ExtReal(*best) : ExtReal::neg_infinity());
    witnesses.push_back(at);
  }

  if (L->domain().is_finite()) {
    // sigma_C = (delta_C)^*, cross-checked
    ConjugateTable viaConj = conjugate(TargetFunction::indicator(C), L);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] != viaConj.values()[i])
        throw std::logic_error("support function disagrees with the indicator conjugate");
  }
  return ConjugateTable(L, std::move(values), std::move(witnesses));
}

ConjugateTable inf_convolution(const ConjugateTable& t1, const ConjugateTable& t2,
                               const FamilySum& Lsum) {
  if (t1.family() != Lsum.left || t2.family() != Lsum.right)
    throw std::invalid_argument("missing decomposition index for these tables");
  std::vector<ExtReal> values;
  std::vector<std::optional<Point>> witnesses(Lsum.family->size());
  std::vector<std::optional<std::pair<int, int>>> splits;
  values.reserve(Lsum.family->size());
  splits.reserve(Lsum.family->size());

  for (std::size_t k = 0; k < Lsum.family->size(); ++k) {
    ExtReal best = ExtReal::pos_infinity();
    std::optional<std::pair<int, int>> argmin;
    for (const auto& [i, j] : Lsum.splits[k]) {
      ExtReal cand = epi_sum(t1.value(i), t2.value(j));
      if (cand < best) {
        best = cand;
        argmin = std::make_pair(i, j);
      }
    }
    values.push_back(best);
    splits.push_back(best.is_finite() ? argmin : std::nullopt);
  }
  return ConjugateTable(Lsum.family, std::move(values), std::move(witnesses),
                        std::move(splits));
}

TargetFunction biconjugate(const TargetFunction& f, const FamilyRef& L) {
  ConjugateTable t = conjugate(f, L);
  const DomainSpec& dom = L->domain();

  bool empty_dom = false;
  for (const ExtReal& v : t.values())
    if (v.is_neg_inf()) empty_dom = true;
  if (empty_dom) {
    // f is +inf everywhere: every affine shift minorizes it
    std::vector<ExtReal> vals(dom.points.size(), ExtReal::pos_infinity());
    return TargetFunction::from_table(dom, std::move(vals), "+inf");
  }

  std::vector<ElementaryFunction> shifted;
  for (std::size_t i = 0; i < L->size(); ++i) {
    if (!t.values()[i].is_finite()) continue;
    shifted.push_back(
        vertical_element(dom, L->member(static_cast<int>(i)), t.values()[i].finite_value()));
  }
  if (shifted.empty()) return TargetFunction::neg_infinity(dom);

  if (dom.is_real_line()) {
    std::vector<PLFunction> fs;
    fs.reserve(shifted.size());
    for (const auto& s : shifted) fs.push_back(s.pl());
    return TargetFunction::from_pl(pl_upper_envelope(fs), "co(" + f.text() + ")");
  }
  std::vector<ExtReal> vals;
  vals.reserve(dom.points.size());
  for (std::size_t p = 0; p < dom.points.size(); ++p) {
    Rational best = shifted[0].table()[p];
    for (std::size_t k = 1; k < shifted.size(); ++k)
      if (shifted[k].table()[p] > best) best = shifted[k].table()[p];
    vals.push_back(ExtReal(best));
  }
  return TargetFunction::from_table(dom, std::move(vals), "co(" + f.text() + ")");
}

std::vector<ExtReal> hull_values_on_family(const ConjugateTable& g) {
  const FamilyRef& fam = g.family();
  const DomainSpec& dom = fam->domain();

  bool any_neg_inf = false;
  std::vector<ElementaryFunction> shifted;
  for (std::size_t i = 0; i < fam->size(); ++i) {
    const ExtReal& v = g.values()[i];
    if (v.is_neg_inf()) any_neg_inf = true;
    if (v.is_finite())
      shifted.push_back(
          vertical_element(dom, fam->member(static_cast<int>(i)), v.finite_value()));
  }
  if (any_neg_inf) return std::vector<ExtReal>(fam->size(), ExtReal::neg_infinity());
  if (shifted.empty()) return std::vector<ExtReal>(fam->size(), ExtReal::pos_infinity());

  std::vector<ExtReal> out;
  out.reserve(fam->size());
  if (dom.is_real_line()) {
    std::vector<PLFunction> fs;
    fs.reserve(shifted.size());
    for (const auto& s : shifted) fs.push_back(s.pl());
    PLFunction e = pl_upper_envelope(fs);
    for (const ElementaryFunction& l : fam->members()) {
      PLFunction d = pl_combine({{Rational(1), l.pl()}, {Rational(-1), e}}, Rational(0));
      out.push_back(pl_supremum(d).value);
    }
    return out;
  }
  std::vector<Rational> e(dom.points.size());
  for (std::size_t p = 0; p < dom.points.size(); ++p) {
    Rational best = shifted[0].table()[p];
    for (std::size_t k = 1; k < shifted.size(); ++k)
      if (shifted[k].table()[p] > best) best = shifted[k].table()[p];
    e[p] = best;
  }
  for (const ElementaryFunction& l : fam->members()) {
    Rational best = l.table()[0] - e[0];
    for (std::size_t p = 1; p < dom.points.size(); ++p) {
      Rational cand = l.table()[p] - e[p];
      if (cand > best) best = cand;
    }
    out.push_back(ExtReal(best));
  }
  return out;
}

}  // namespace absconv
