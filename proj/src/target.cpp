#include "absconv/target.hpp"

#include <stdexcept>

namespace absconv {

TargetFunction TargetFunction::from_pl(PLFunction pl, std::string text) {
  TargetFunction f;
  f.domain_ = DomainSpec::real_line();
  f.text_ = std::move(text);
  f.pl_ = std::move(pl);
  return f;
}

TargetFunction TargetFunction::from_table(DomainSpec domain, std::vector<ExtReal> values,
                                          std::string text) {
  if (!domain.is_finite()) throw std::invalid_argument("value table needs a finite domain");
  if (values.size() != domain.points.size())
    throw std::invalid_argument("value table size mismatch");
  TargetFunction f;
  f.domain_ = std::move(domain);
  f.text_ = std::move(text);
  f.table_ = std::move(values);
  return f;
}

TargetFunction TargetFunction::neg_infinity(DomainSpec domain) {
  TargetFunction f;
  f.text_ = "-inf";
  if (domain.is_finite()) {
    f.domain_ = std::move(domain);
    f.table_.assign(f.domain_.points.size(), ExtReal::neg_infinity());
  } else {
    f.domain_ = std::move(domain);
    f.neg_inf_ = true;
  }
  return f;
}

TargetFunction TargetFunction::from_text(const std::string& expr_text,
                                         const DomainSpec& domain) {
  return from_elementary(ElementaryFunction::from_text(expr_text, domain), domain);
}

TargetFunction TargetFunction::from_member(const FamilyRef& family, int index) {
  return from_elementary(family->member(index), family->domain());
}

TargetFunction TargetFunction::from_elementary(const ElementaryFunction& f,
                                               const DomainSpec& domain) {
  if (f.is_pl()) return from_pl(f.pl(), f.text());
  std::vector<ExtReal> vals;
  vals.reserve(f.table().size());
  for (const Rational& v : f.table()) vals.push_back(ExtReal(v));
  return from_table(domain, std::move(vals), f.text());
}

TargetFunction TargetFunction::envelope(const FamilyRef& family,
                                        const std::vector<int>& indices) {
  const DomainSpec& dom = family->domain();
  if (indices.empty()) return neg_infinity(dom);
  std::string text = "sup{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) text += ", ";
    text += family->member(indices[i]).text();
  }
  text += "}";
  if (dom.is_real_line()) {
    std::vector<PLFunction> fs;
    fs.reserve(indices.size());
    for (int i : indices) fs.push_back(family->member(i).pl());
    return from_pl(pl_upper_envelope(fs), std::move(text));
  }
  std::vector<ExtReal> vals;
  vals.reserve(dom.points.size());
  for (std::size_t p = 0; p < dom.points.size(); ++p) {
    Rational best = family->member(indices[0]).table()[p];
    for (std::size_t k = 1; k < indices.size(); ++k) {
      const Rational& v = family->member(indices[k]).table()[p];
      if (v > best) best = v;
    }
    vals.push_back(ExtReal(best));
  }
  return from_table(dom, std::move(vals), std::move(text));
}

TargetFunction TargetFunction::indicator(const PointSet& set) {
  if (!set.domain().is_finite())
    throw std::invalid_argument("indicator targets need a finite domain");
  std::vector<ExtReal> vals;
  vals.reserve(set.domain().points.size());
  for (std::size_t i = 0; i < set.domain().points.size(); ++i)
    vals.push_back(set.contains_index(static_cast<int>(i)) ? ExtReal(Rational(0))
                                                           : ExtReal::pos_infinity());
  return from_table(set.domain(), std::move(vals), "indicator(" + set.to_string() + ")");
}

ExtReal TargetFunction::value_at(const Point& p) const {
  if (neg_inf_) return ExtReal::neg_infinity();
  if (pl_) {
    if (p.size() != 1) throw std::invalid_argument("line target evaluated off the line");
    return ExtReal(pl_->value_at(p[0]));
  }
  auto idx = domain_.point_index(p);
  if (!idx) throw std::invalid_argument("point outside the finite domain: " + point_to_string(p));
  return table_[static_cast<std::size_t>(*idx)];
}

std::vector<int> TargetFunction::dom_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i].is_finite()) out.push_back(static_cast<int>(i));
  return out;
}

bool TargetFunction::dom_nonempty() const {
  if (neg_inf_) return false;
  if (pl_) return true;
  return !dom_indices().empty();
}

bool TargetFunction::same_as(const TargetFunction& o) const {
  if (domain_ != o.domain_) return false;
  if (neg_inf_ || o.neg_inf_) return neg_inf_ == o.neg_inf_;
  if (pl_.has_value() != o.pl_.has_value()) return false;
  if (pl_) return *pl_ == *o.pl_;
  return table_ == o.table_;
}

TargetFunction target_add(const TargetFunction& a, const TargetFunction& b) {
  if (a.domain() != b.domain()) throw std::invalid_argument("adding targets across domains");
  std::string text = "(" + a.text() + ") + (" + b.text() + ")";
  if (a.domain().is_real_line()) {
    if (a.is_neg_inf() || b.is_neg_inf()) return TargetFunction::neg_infinity(a.domain());
    return TargetFunction::from_pl(
        pl_combine({{Rational(1), a.pl()}, {Rational(1), b.pl()}}, Rational(0)), std::move(text));
  }
  std::vector<ExtReal> vals;
  vals.reserve(a.table().size());
  for (std::size_t i = 0; i < a.table().size(); ++i) {
    const ExtReal &x = a.table()[i], &y = b.table()[i];
    // +inf absorbs -inf in a sum of improper targets
    if (x.is_pos_inf() || y.is_pos_inf())
      vals.push_back(ExtReal::pos_infinity());
    else if (x.is_neg_inf() || y.is_neg_inf())
      vals.push_back(ExtReal::neg_infinity());
    else
      vals.push_back(x + y);
  }
  return TargetFunction::from_table(a.domain(), std::move(vals), std::move(text));
}

TargetFunction target_negate_member(const DomainSpec& domain, const ElementaryFunction& u) {
  ElementaryFunction neg =
      member_combine(domain, {{Rational(-1), &u}}, Rational(0), "-(" + u.text() + ")");
  return TargetFunction::from_elementary(neg, domain);
}

PointSet sublevel_set(const TargetFunction& f, const Rational& c) {
  if (!f.domain().is_finite())
    throw std::invalid_argument("sublevel sets are computed on finite domains");
  std::vector<int> idx;
  for (std::size_t i = 0; i < f.table().size(); ++i)
    if (f.table()[i] <= ExtReal(c)) idx.push_back(static_cast<int>(i));
  return PointSet::finite(f.domain(), std::move(idx));
}

}  // namespace absconv
