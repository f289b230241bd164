#include "absconv/hulls.hpp"

#include <algorithm>
#include <stdexcept>

namespace absconv {

bool SupportSet::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::string SupportSet::to_string() const {
  if (indices.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ", ";
    s += family->member(indices[i]).text();
  }
  return s + "}";
}

SupportSet make_subset(const FamilyRef& family, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices)
    if (i < 0 || static_cast<std::size_t>(i) >= family->size())
      throw std::out_of_range("member index outside the family");
  return SupportSet{family, std::move(indices)};
}

bool member_dominated_by(const DomainSpec& domain, const ElementaryFunction& u,
                         const TargetFunction& f) {
  if (f.is_neg_inf()) return false;
  if (domain.is_real_line()) return pl_dominates(f.pl(), u.pl());
  for (std::size_t i = 0; i < domain.points.size(); ++i)
    if (ExtReal(u.table()[i]) > f.table()[i]) return false;
  return true;
}

SupportSet support_set(const FamilyRef& H, const TargetFunction& f) {
  if (H->domain() != f.domain())
    throw std::invalid_argument("support set across different domains");
  std::vector<int> idx;
  for (std::size_t i = 0; i < H->size(); ++i)
    if (member_dominated_by(H->domain(), H->member(static_cast<int>(i)), f))
      idx.push_back(static_cast<int>(i));
  return SupportSet{H, std::move(idx)};
}

TargetFunction co_function(const FamilyRef& H, const TargetFunction& f) {
  return TargetFunction::envelope(H, support_set(H, f).indices);
}

bool is_abstract_convex(const FamilyRef& H, const TargetFunction& f) {
  return f.same_as(co_function(H, f));
}

SupportSet co_set(const FamilyRef& H, const SupportSet& C) {
  if (C.family != H) throw std::invalid_argument("subset does not index this family");
  return support_set(H, TargetFunction::envelope(H, C.indices));
}

PointSet point_set_hull(const FamilyRef& L, const PointSet& Y) {
  if (!L->domain().is_finite())
    throw std::invalid_argument("point-set hulls are computed on finite backends");
  if (L->domain() != Y.domain())
    throw std::invalid_argument("point set on a different domain");
  if (Y.is_empty()) return PointSet::none(L->domain());

  // per-member sup over Y
  std::vector<Rational> sups(L->size());
  for (std::size_t m = 0; m < L->size(); ++m) {
    const auto& table = L->member(static_cast<int>(m)).table();
    Rational best = table[static_cast<std::size_t>(Y.indices().front())];
    for (int i : Y.indices()) {
      const Rational& v = table[static_cast<std::size_t>(i)];
      if (v > best) best = v;
    }
    sups[m] = best;
  }
  std::vector<int> hull;
  for (std::size_t p = 0; p < L->domain().points.size(); ++p) {
    bool in = true;
    for (std::size_t m = 0; m < L->size(); ++m) {
      if (L->member(static_cast<int>(m)).table()[p] > sups[m]) {
        in = false;
        break;
      }
    }
    if (in) hull.push_back(static_cast<int>(p));
  }
  return PointSet::finite(L->domain(), std::move(hull));
}

PointSet member_strict_above(const DomainSpec& domain, const ElementaryFunction& l,
                             const TargetFunction& f) {
  if (domain.is_real_line()) {
    if (f.is_neg_inf()) return PointSet::all(domain);
    return PointSet::real(pl_strict_above_region(l.pl(), f.pl()));
  }
  std::vector<int> idx;
  for (std::size_t i = 0; i < domain.points.size(); ++i)
    if (ExtReal(l.table()[i]) > f.table()[i]) idx.push_back(static_cast<int>(i));
  return PointSet::finite(domain, std::move(idx));
}

std::optional<Point> canonical_witness(const PointSet& region) {
  if (region.is_empty()) return std::nullopt;
  if (region.domain().is_real_line())
    return point1(region.intervals().parts().front().representative());
  const Point* best = nullptr;
  for (int i : region.indices()) {
    const Point& p = region.domain().points[static_cast<std::size_t>(i)];
    if (!best || canonical_point_less(p, *best)) best = &p;
  }
  return *best;
}

Point separate_point_from_set(const FamilyRef& H, const SupportSet& U,
                              const ElementaryFunction& l) {
  SupportSet closed = co_set(H, U);
  if (closed.indices != U.indices)
    throw std::invalid_argument("separation needs a hull-closed set");
  auto li = H->find(l);
  if (!li) throw std::invalid_argument("the function to separate is not in the family");
  if (U.contains(*li)) throw NotSeparable();

  TargetFunction env = TargetFunction::envelope(H, U.indices);
  PointSet region = member_strict_above(H->domain(), l, env);
  auto w = canonical_witness(region);
  if (!w) throw NotSeparable();
  return *w;
}

SetSeparation separate_sets(const FamilyRef& H, const SupportSet& A, const SupportSet& B) {
  SetSeparation out;
  if (co_set(H, A).indices != A.indices) out.notes.push_back("A is not hull-closed");
  if (co_set(H, B).indices != B.indices) out.notes.push_back("B is not hull-closed");
  {
    std::vector<int> common;
    std::set_intersection(A.indices.begin(), A.indices.end(), B.indices.begin(),
                          B.indices.end(), std::back_inserter(common));
    if (!common.empty()) out.notes.push_back("A and B are not disjoint");
  }

  TargetFunction envA = TargetFunction::envelope(H, A.indices);
  PointSet separator = PointSet::all(H->domain());
  for (int b : B.indices) {
    PointSet region = member_strict_above(H->domain(), H->member(b), envA);
    out.regions.emplace_back(b, region);
    separator = PointSet::intersect(separator, region);
  }
  out.witness = canonical_witness(separator);
  return out;
}

}  // namespace absconv
