#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absconv/family.hpp"
#include "absconv/sets.hpp"

namespace absconv {

/// A function under analysis: finite-valued piecewise linear on the line, the
/// constant -inf, or an extended-real value table over a finite domain
/// (indicator-style targets carry +inf off their support).
class TargetFunction {
 public:
  static TargetFunction from_pl(PLFunction pl, std::string text);
  static TargetFunction from_table(DomainSpec domain, std::vector<ExtReal> values,
                                   std::string text);
  static TargetFunction neg_infinity(DomainSpec domain);
  static TargetFunction from_text(const std::string& expr_text, const DomainSpec& domain);
  static TargetFunction from_member(const FamilyRef& family, int index);
  static TargetFunction from_elementary(const ElementaryFunction& f, const DomainSpec& domain);
  /// Pointwise max of the selected members; empty selection is the -inf function.
  static TargetFunction envelope(const FamilyRef& family, const std::vector<int>& indices);
  /// 0 on the set, +inf off it (finite backends only).
  static TargetFunction indicator(const PointSet& set);

  const DomainSpec& domain() const { return domain_; }
  const std::string& text() const { return text_; }
  bool is_pl() const { return pl_.has_value(); }
  bool is_neg_inf() const { return neg_inf_; }
  bool is_table() const { return !pl_ && !neg_inf_; }
  const PLFunction& pl() const { return *pl_; }
  const std::vector<ExtReal>& table() const { return table_; }

  ExtReal value_at(const Point& p) const;
  ExtReal value_at_index(int i) const { return table_.at(static_cast<std::size_t>(i)); }
  bool finite_at(const Point& p) const { return value_at(p).is_finite(); }
  /// Finite-backend indices where the value is finite (the effective domain).
  std::vector<int> dom_indices() const;
  bool dom_nonempty() const;

  bool same_as(const TargetFunction& o) const;

 private:
  TargetFunction() = default;

  DomainSpec domain_;
  std::string text_;
  std::optional<PLFunction> pl_;
  std::vector<ExtReal> table_;
  bool neg_inf_ = false;
};

TargetFunction target_add(const TargetFunction& a, const TargetFunction& b);
TargetFunction target_negate_member(const DomainSpec& domain, const ElementaryFunction& u);

/// { x : f(x) <= c } (finite backends).
PointSet sublevel_set(const TargetFunction& f, const Rational& c);

}  // namespace absconv
