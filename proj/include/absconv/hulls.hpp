#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absconv/target.hpp"

namespace absconv {

class NotSeparable : public std::runtime_error {
 public:
  NotSeparable() : std::runtime_error("not-separable") {}
};

/// An index subset of a family, read extensionally as the set of functions it
/// selects.  Indices are sorted and unique.
struct SupportSet {
  FamilyRef family;
  std::vector<int> indices;

  bool contains(int i) const;
  std::string to_string() const;
};

SupportSet make_subset(const FamilyRef& family, std::vector<int> indices);

/// supp_H(f): exactly the members of H dominated by f everywhere.
SupportSet support_set(const FamilyRef& H, const TargetFunction& f);

/// co_H f: the envelope of supp_H(f); the -inf function when the support set
/// is empty.
TargetFunction co_function(const FamilyRef& H, const TargetFunction& f);

bool is_abstract_convex(const FamilyRef& H, const TargetFunction& f);

/// Hull of a subset of H: the support set of its envelope.
SupportSet co_set(const FamilyRef& H, const SupportSet& C);

/// Hull of a point set under the evaluation duality (finite backends):
/// { y : l(y) <= sup_{x in Y} l(x) for every l }.
PointSet point_set_hull(const FamilyRef& L, const PointSet& Y);

/// True iff u <= f everywhere.
bool member_dominated_by(const DomainSpec& domain, const ElementaryFunction& u,
                         const TargetFunction& f);

/// { x : l(x) > f(x) } for a family member against a target.
PointSet member_strict_above(const DomainSpec& domain, const ElementaryFunction& l,
                             const TargetFunction& f);

/// Canonical witness choice inside a nonempty point set: interval-midpoint
/// rule on the line, smallest |x| then smallest x on finite grids.
std::optional<Point> canonical_witness(const PointSet& region);

/// Separates l in H \ U from the hull-closed set U: a point where l strictly
/// exceeds every member of U.  Throws NotSeparable when none exists.
Point separate_point_from_set(const FamilyRef& H, const SupportSet& U,
                              const ElementaryFunction& l);

struct SetSeparation {
  std::optional<Point> witness;
  /// Per-member of B: the region where that member strictly exceeds the
  /// envelope of A.  The separator set is the intersection of the regions.
  std::vector<std::pair<int, PointSet>> regions;
  std::vector<std::string> notes;  // precondition violations, reported not fatal
};

/// Searches for one point at which every member of B strictly exceeds every
/// member of A.  Absence of a separator is a normal result.
SetSeparation separate_sets(const FamilyRef& H, const SupportSet& A, const SupportSet& B);

}  // namespace absconv
