#include "absconv/sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace absconv {

PointSet PointSet::finite(DomainSpec domain, std::vector<int> indices) {
  if (!domain.is_finite())
    throw std::invalid_argument("index-based point set needs a finite domain");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices)
    if (i < 0 || static_cast<std::size_t>(i) >= domain.points.size())
      throw std::out_of_range("point index outside the domain");
  PointSet s;
  s.domain_ = std::move(domain);
  s.indices_ = std::move(indices);
  return s;
}

PointSet PointSet::real(IntervalSet intervals) {
  PointSet s;
  s.domain_ = DomainSpec::real_line();
  s.intervals_ = std::move(intervals);
  return s;
}

PointSet PointSet::all(const DomainSpec& domain) {
  if (domain.is_real_line()) return real(IntervalSet::all_reals());
  std::vector<int> idx(domain.points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return finite(domain, std::move(idx));
}

PointSet PointSet::none(const DomainSpec& domain) {
  if (domain.is_real_line()) return real(IntervalSet::empty_set());
  return finite(domain, {});
}

bool PointSet::is_empty() const {
  return domain_.is_real_line() ? intervals_.empty() : indices_.empty();
}

bool PointSet::contains_index(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool PointSet::contains(const Point& p) const {
  if (domain_.is_real_line()) {
    if (p.size() != 1) return false;
    return intervals_.contains(p[0]);
  }
  auto idx = domain_.point_index(p);
  return idx && contains_index(*idx);
}

PointSet PointSet::intersect(const PointSet& a, const PointSet& b) {
  if (a.domain_ != b.domain_) throw std::invalid_argument("point sets on different domains");
  if (a.domain_.is_real_line())
    return real(IntervalSet::intersect(a.intervals_, b.intervals_));
  std::vector<int> common;
  std::set_intersection(a.indices_.begin(), a.indices_.end(), b.indices_.begin(),
                        b.indices_.end(), std::back_inserter(common));
  return finite(a.domain_, std::move(common));
}

std::string PointSet::to_string() const {
  if (domain_.is_real_line()) return intervals_.to_string();
  if (indices_.empty()) return "empty";
  std::string s = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s += ", ";
    s += point_to_string(domain_.points[static_cast<std::size_t>(indices_[i])]);
  }
  return s + "}";
}

}  // namespace absconv
