#include "absconv/family.hpp"

#include <stdexcept>

namespace absconv {

ElementaryFunction ElementaryFunction::from_expr(const FunctionExpr& e,
                                                 const DomainSpec& domain) {
  if (e.max_variable_index() + 1 > domain.dimension)
    throw std::invalid_argument("expression uses more coordinates than the domain has");
  ElementaryFunction f;
  f.text_ = e.to_string();
  f.expr_ = e;
  if (domain.is_real_line()) {
    f.pl_ = e.lower_pl();
  } else {
    f.table_.reserve(domain.points.size());
    for (const Point& p : domain.points) f.table_.push_back(e.eval(p));
  }
  return f;
}

ElementaryFunction ElementaryFunction::from_text(const std::string& text,
                                                 const DomainSpec& domain) {
  return from_expr(parse_expr(text), domain);
}

ElementaryFunction ElementaryFunction::from_pl(PLFunction pl, std::string text,
                                               std::optional<FunctionExpr> expr) {
  ElementaryFunction f;
  f.text_ = std::move(text);
  f.expr_ = std::move(expr);
  f.pl_ = std::move(pl);
  return f;
}

ElementaryFunction ElementaryFunction::from_table(std::vector<Rational> values,
                                                  std::string text,
                                                  std::optional<FunctionExpr> expr) {
  ElementaryFunction f;
  f.text_ = std::move(text);
  f.expr_ = std::move(expr);
  f.table_ = std::move(values);
  return f;
}

Rational ElementaryFunction::eval(const DomainSpec& domain, const Point& p) const {
  if (is_pl()) {
    if (p.size() != 1) throw std::invalid_argument("line function evaluated off the line");
    return pl_->value_at(p[0]);
  }
  auto idx = domain.point_index(p);
  if (!idx) throw std::invalid_argument("point outside the finite domain: " + point_to_string(p));
  return table_.at(static_cast<std::size_t>(*idx));
}

bool ElementaryFunction::same_function(const ElementaryFunction& o) const {
  if (is_pl() != o.is_pl()) return false;
  if (is_pl()) return *pl_ == *o.pl_;
  return table_ == o.table_;
}

FunctionFamily::FunctionFamily(DomainSpec domain, std::vector<ElementaryFunction> members)
    : domain_(std::move(domain)) {
  for (auto& m : members) {
    bool is_table = !m.is_pl();
    if (domain_.is_real_line() && is_table)
      throw std::invalid_argument("table-backed member on the real line");
    if (domain_.is_finite()) {
      if (m.is_pl()) throw std::invalid_argument("line-backed member on a finite domain");
      if (m.table().size() != domain_.points.size())
        throw std::invalid_argument("member table size mismatch");
    }
    bool dup = false;
    for (const auto& kept : members_)
      if (kept.same_function(m)) {
        dup = true;
        break;
      }
    if (!dup) members_.push_back(std::move(m));
  }
}

std::optional<int> FunctionFamily::find(const ElementaryFunction& f) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].same_function(f)) return static_cast<int>(i);
  return std::nullopt;
}

FamilyRef make_family(DomainSpec domain, std::vector<ElementaryFunction> members) {
  return std::make_shared<FunctionFamily>(std::move(domain), std::move(members));
}

FamilyRef make_family_from_texts(const DomainSpec& domain,
                                 const std::vector<std::string>& exprs) {
  std::vector<ElementaryFunction> members;
  members.reserve(exprs.size());
  for (const std::string& t : exprs) members.push_back(ElementaryFunction::from_text(t, domain));
  return make_family(domain, std::move(members));
}

ElementaryFunction member_combine(
    const DomainSpec& domain,
    const std::vector<std::pair<Rational, const ElementaryFunction*>>& terms,
    const Rational& offset, const std::string& text, std::optional<FunctionExpr> expr) {
  if (domain.is_real_line()) {
    std::vector<std::pair<Rational, PLFunction>> pl_terms;
    pl_terms.reserve(terms.size());
    for (const auto& [c, f] : terms) pl_terms.emplace_back(c, f->pl());
    return ElementaryFunction::from_pl(pl_combine(pl_terms, offset), text, std::move(expr));
  }
  std::vector<Rational> vals(domain.points.size(), offset);
  for (const auto& [c, f] : terms)
    for (std::size_t i = 0; i < vals.size(); ++i)
      vals[i] += c * f->table()[i];
  return ElementaryFunction::from_table(std::move(vals), text, std::move(expr));
}

ElementaryFunction vertical_element(const DomainSpec& domain, const ElementaryFunction& l,
                                    const Rational& c) {
  if (c.is_zero()) return l;
  std::optional<FunctionExpr> expr;
  std::string text;
  if (l.expr()) {
    expr = FunctionExpr::subtract(*l.expr(), FunctionExpr::literal(c));
    text = expr->to_string();
  } else {
    text = "(" + l.text() + ") - " + c.to_string();
  }
  return member_combine(domain, {{Rational(1), &l}}, -c, text, std::move(expr));
}

ElementaryFunction zero_member(const DomainSpec& domain) {
  return ElementaryFunction::from_expr(FunctionExpr::literal(Rational(0)), domain);
}

FamilyRef family_pin(const FamilyRef& L, const Point& x) {
  if (L->domain().is_finite() && !L->domain().point_index(x))
    throw std::invalid_argument("pin point outside the finite domain");
  std::vector<ElementaryFunction> members;
  members.reserve(L->size());
  for (const ElementaryFunction& l : L->members())
    members.push_back(vertical_element(L->domain(), l, l.eval(L->domain(), x)));
  return make_family(L->domain(), std::move(members));
}

FamilySum family_sum_scaled(const Rational& c1, const FamilyRef& L1, const Rational& c2,
                            const FamilyRef& L2) {
  if (L1->domain() != L2->domain())
    throw std::invalid_argument("family sum across different domains");
  const DomainSpec& dom = L1->domain();

  std::vector<ElementaryFunction> members;
  std::vector<std::vector<std::pair<int, int>>> splits;
  auto scaled_text = [](const Rational& c, const ElementaryFunction& l) -> std::string {
    if (c == Rational(1)) return l.text();
    return c.to_string() + "*(" + l.text() + ")";
  };
  for (int i = 0; i < static_cast<int>(L1->size()); ++i) {
    for (int j = 0; j < static_cast<int>(L2->size()); ++j) {
      const ElementaryFunction& a = L1->member(i);
      const ElementaryFunction& b = L2->member(j);
      std::optional<FunctionExpr> expr;
      if (a.expr() && b.expr()) {
        FunctionExpr ea = c1 == Rational(1) ? *a.expr() : FunctionExpr::scale(c1, *a.expr());
        FunctionExpr eb = c2 == Rational(1) ? *b.expr() : FunctionExpr::scale(c2, *b.expr());
        expr = FunctionExpr::add(ea, eb);
      }
      std::string text =
          expr ? expr->to_string() : scaled_text(c1, a) + " + " + scaled_text(c2, b);
      ElementaryFunction sum =
          member_combine(dom, {{c1, &a}, {c2, &b}}, Rational(0), text, std::move(expr));
      bool found = false;
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (members[k].same_function(sum)) {
          splits[k].emplace_back(i, j);
          found = true;
          break;
        }
      }
      if (!found) {
        members.push_back(std::move(sum));
        splits.push_back({{i, j}});
      }
    }
  }
  FamilySum out;
  out.family = make_family(dom, std::move(members));
  out.left = L1;
  out.right = L2;
  out.splits = std::move(splits);
  return out;
}

FamilySum family_sum(const FamilyRef& L1, const FamilyRef& L2) {
  return family_sum_scaled(Rational(1), L1, Rational(1), L2);
}

FamilyRef family_compose(const FamilyRef& L, const std::vector<int>& point_map,
                         const DomainSpec& Y) {
  if (!L->domain().is_finite() || !Y.is_finite())
    throw std::invalid_argument("composition needs finite domains on both sides");
  if (point_map.size() != Y.points.size())
    throw std::invalid_argument("point map size does not match the new domain");
  for (int t : point_map)
    if (t < 0 || static_cast<std::size_t>(t) >= L->domain().points.size())
      throw std::invalid_argument("point map leaves the target domain");
  std::vector<ElementaryFunction> members;
  members.reserve(L->size());
  for (const ElementaryFunction& l : L->members()) {
    std::vector<Rational> vals;
    vals.reserve(point_map.size());
    for (int t : point_map) vals.push_back(l.table()[static_cast<std::size_t>(t)]);
    members.push_back(ElementaryFunction::from_table(std::move(vals), "(" + l.text() + ") o u"));
  }
  return make_family(Y, std::move(members));
}

bool family_subset(const FunctionFamily& A, const FunctionFamily& B) {
  for (const ElementaryFunction& a : A.members())
    if (!B.find(a)) return false;
  return true;
}

}  // namespace absconv
