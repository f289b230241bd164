#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absconv/domain.hpp"
#include "absconv/expr.hpp"
#include "absconv/pl.hpp"

namespace absconv {

/// One elementary (abstract linear) function: a display expression plus its
/// exact backend form — a canonical PLFunction on the line, or a full value
/// table over the finite domain.  Identity is pointwise (backend) equality.
class ElementaryFunction {
 public:
  static ElementaryFunction from_expr(const FunctionExpr& e, const DomainSpec& domain);
  static ElementaryFunction from_text(const std::string& text, const DomainSpec& domain);
  static ElementaryFunction from_pl(PLFunction pl, std::string text,
                                    std::optional<FunctionExpr> expr = std::nullopt);
  static ElementaryFunction from_table(std::vector<Rational> values, std::string text,
                                       std::optional<FunctionExpr> expr = std::nullopt);

  const std::string& text() const { return text_; }
  const std::optional<FunctionExpr>& expr() const { return expr_; }
  bool is_pl() const { return pl_.has_value(); }
  const PLFunction& pl() const { return *pl_; }
  const std::vector<Rational>& table() const { return table_; }

  Rational eval(const DomainSpec& domain, const Point& p) const;
  Rational eval_index(int point_index) const { return table_.at(static_cast<std::size_t>(point_index)); }

  /// Pointwise equality of backend forms.
  bool same_function(const ElementaryFunction& o) const;

 private:
  ElementaryFunction() = default;

  std::string text_;
  std::optional<FunctionExpr> expr_;
  std::optional<PLFunction> pl_;
  std::vector<Rational> table_;
};

/// Finite ordered family of elementary functions over one domain, with
/// pointwise-equal members merged (first-seen expression kept).  Member index
/// identity is meaningful and stable.
class FunctionFamily {
 public:
  FunctionFamily(DomainSpec domain, std::vector<ElementaryFunction> members);

  const DomainSpec& domain() const { return domain_; }
  const std::vector<ElementaryFunction>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const ElementaryFunction& member(int i) const {
    return members_.at(static_cast<std::size_t>(i));
  }

  std::optional<int> find(const ElementaryFunction& f) const;

 private:
  DomainSpec domain_;
  std::vector<ElementaryFunction> members_;
};

using FamilyRef = std::shared_ptr<const FunctionFamily>;

FamilyRef make_family(DomainSpec domain, std::vector<ElementaryFunction> members);
FamilyRef make_family_from_texts(const DomainSpec& domain,
                                 const std::vector<std::string>& exprs);

/// Exact member-level linear combination sum(c_i l_i) + offset.
ElementaryFunction member_combine(
    const DomainSpec& domain,
    const std::vector<std::pair<Rational, const ElementaryFunction*>>& terms,
    const Rational& offset, const std::string& text,
    std::optional<FunctionExpr> expr = std::nullopt);

/// The abstract affine element l - c.
ElementaryFunction vertical_element(const DomainSpec& domain, const ElementaryFunction& l,
                                    const Rational& c);

/// Zero function on the domain.
ElementaryFunction zero_member(const DomainSpec& domain);

/// The pinned family L_x = { l - l(x) : l in L }; every member vanishes at x.
FamilyRef family_pin(const FamilyRef& L, const Point& x);

/// Pairwise-sum family with its decomposition index: splits[k] lists every
/// (i, j) with L1[i] + L2[j] pointwise equal to member k.
struct FamilySum {
  FamilyRef family;
  FamilyRef left, right;
  std::vector<std::vector<std::pair<int, int>>> splits;
};

FamilySum family_sum(const FamilyRef& L1, const FamilyRef& L2);
FamilySum family_sum_scaled(const Rational& c1, const FamilyRef& L1, const Rational& c2,
                            const FamilyRef& L2);

/// L o u for a point map u : Y -> X given as X-point indices per Y-point.
FamilyRef family_compose(const FamilyRef& L, const std::vector<int>& point_map,
                         const DomainSpec& Y);

/// Extensional subset test (every member of A appears in B).
bool family_subset(const FunctionFamily& A, const FunctionFamily& B);

}  // namespace absconv
