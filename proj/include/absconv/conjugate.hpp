#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "absconv/hulls.hpp"
#include "absconv/target.hpp"

namespace absconv {

/// Per-member conjugate (or infimal-convolution) values over one family.
/// witnesses: maximizer points when attained; splits: the minimizing
/// decomposition for convolution entries.
class ConjugateTable {
 public:
  ConjugateTable(FamilyRef family, std::vector<ExtReal> values,
                 std::vector<std::optional<Point>> witnesses,
                 std::vector<std::optional<std::pair<int, int>>> splits = {});

  const FamilyRef& family() const { return family_; }
  const std::vector<ExtReal>& values() const { return values_; }
  const ExtReal& value(int i) const { return values_.at(static_cast<std::size_t>(i)); }
  const std::optional<Point>& witness(int i) const {
    return witnesses_.at(static_cast<std::size_t>(i));
  }
  const std::optional<std::pair<int, int>>& split(int i) const {
    return splits_.at(static_cast<std::size_t>(i));
  }
  bool attained(int i) const;

 private:
  FamilyRef family_;
  std::vector<ExtReal> values_;
  std::vector<std::optional<Point>> witnesses_;
  std::vector<std::optional<std::pair<int, int>>> splits_;
};

/// f*(u) = sup_x ( u(x) - f(x) ), exact on both backends, with a maximizer
/// witness when attained.
ConjugateTable conjugate(const TargetFunction& f, const FamilyRef& L);

/// sigma_C(l) = sup_{x in C} l(x); cross-checked against the conjugate of the
/// indicator on finite backends.
ConjugateTable support_function(const PointSet& C, const FamilyRef& L);

/// Infimal convolution on the summed family: per member, the minimum of
/// t1(l1) + t2(l2) over the recorded decompositions; +inf with no split.
ConjugateTable inf_convolution(const ConjugateTable& t1, const ConjugateTable& t2,
                               const FamilySum& Lsum);

/// co_{H_L} f, computed through the conjugate: sup_l ( l(x) - f*(l) ).
TargetFunction biconjugate(const TargetFunction& f, const FamilyRef& L);

/// Values of the hull of a family-indexed function g back on the family:
/// co(g)(l) = sup_x ( l(x) - e(x) ) with e(x) = sup_{l'} ( l'(x) - g(l') ).
std::vector<ExtReal> hull_values_on_family(const ConjugateTable& g);

}  // namespace absconv
