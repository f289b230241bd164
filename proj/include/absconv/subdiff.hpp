#pragma once

#include "absconv/conjugate.hpp"
#include "absconv/report.hpp"

namespace absconv {

/// Members l of L with f(y) >= f(x) + l(y) - l(x) for every y, at one point.
struct SubdifferentialSet {
  FamilyRef family;
  std::vector<int> indices;
  Point at;

  bool contains(int i) const;
  std::string to_string() const;
};

/// Members maximized over C at x; empty off C by convention.
struct NormalSet {
  FamilyRef family;
  std::vector<int> indices;
  Point at;
  PointSet set;
};

SubdifferentialSet subdifferential(const TargetFunction& f, const FamilyRef& L,
                                   const Point& x);

/// Per member u: [ f*(u) + f(x) = u(x) ] iff [ u in the subdifferential ].
RuleReport moreau_verify(const TargetFunction& f, const FamilyRef& L, const Point& x);

NormalSet normal_set(const FamilyRef& L, const Point& x, const PointSet& C);

/// Per sampled (l, c): [ c >= f*(l) ] iff [ l - c <= f everywhere ]; the
/// boundary c = f*(l) and c = f*(l) +- 1 are always added when finite.
RuleReport epi_conjugate_check(const TargetFunction& f, const FamilyRef& L,
                               const std::vector<std::pair<int, Rational>>& samples);

/// The subdifferential as a normal set of the epigraph at (x, f(x)).
RuleReport normal_subdiff_check(const TargetFunction& f, const FamilyRef& L, const Point& x,
                                const std::vector<Rational>& c_samples);

/// Restriction: the L2-subdifferential intersected with L1 equals the
/// L1-subdifferential (needs L1 contained in L2).
RuleReport restriction_check(const TargetFunction& f, const FamilyRef& L1,
                             const FamilyRef& L2, const Point& x);

/// Vertical-shift, pinning, and horizontal-shift identities for the
/// subdifferential, each verified as an exact set equality.
RuleReport shift_rule_check(const TargetFunction& f, const FamilyRef& L,
                            const ElementaryFunction& u, const Point& y, const Point& x);

/// For f = max of G at x: the hull of the pinned active set is contained in
/// the pinned subdifferential; strictness witnesses are reported.
RuleReport max_rule_verify(const FamilyRef& G, const FamilyRef& L, const Point& x);

/// Chain rule through a point map u : Y -> X; inclusion always, equality when
/// u covers the effective domain of f.
RuleReport composition_subdiff_verify(const TargetFunction& f, const FamilyRef& L,
                                      const std::vector<int>& point_map, const DomainSpec& Y,
                                      const Point& x);

struct ConjugateSumResult {
  RuleReport report;
  FamilySum sum;
  std::vector<ExtReal> conv_values;    // (f1* (+) f2*) per summed member
  std::vector<ExtReal> direct_values;  // (f1 + f2)* per summed member
  bool hypothesis = false;             // values agree everywhere, attained
};

/// Decides the support-sum condition through conjugates: the infimal
/// convolution of the conjugates matches the conjugate of the sum member by
/// member.  Also validates the conjugate-of-sum hull identity on convex
/// proper inputs, and the epigraph-sum identity on boundary samples.
ConjugateSumResult conjugate_sum_check(const TargetFunction& f1, const FamilyRef& L1,
                                       const TargetFunction& f2, const FamilyRef& L2);

/// Normal set of an intersection versus the sum of normal sets.
RuleReport normal_sum_check(const PointSet& C, const FamilyRef& L1, const PointSet& D,
                            const FamilyRef& L2, const Point& x);

struct SumRuleResult {
  RuleReport report;
  FamilySum sum;
  std::vector<int> combined;   // subdifferential of f1+f2 over the summed family
  std::vector<int> minkowski;  // member-wise sums of the two subdifferentials
};

/// Sum rule: the inclusion (sum of subdifferentials inside the subdifferential
/// of the sum) always; exact equality under the support-sum hypothesis.
SumRuleResult sum_rule_verify(const TargetFunction& f1, const FamilyRef& L1,
                              const TargetFunction& f2, const FamilyRef& L2, const Point& x);

/// Member-wise Minkowski sum of two index sets through the decomposition
/// index of a summed family.
std::vector<int> minkowski_indices(const FamilySum& sum, const std::vector<int>& left,
                                   const std::vector<int>& right);

}  // namespace absconv
