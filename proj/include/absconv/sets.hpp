#pragma once

#include <string>
#include <vector>

#include "absconv/domain.hpp"
#include "absconv/interval.hpp"

namespace absconv {

/// A subset of the domain: sorted point indices on a finite backend, a
/// canonical interval set on the real line.
class PointSet {
 public:
  static PointSet finite(DomainSpec domain, std::vector<int> indices);
  static PointSet real(IntervalSet intervals);
  static PointSet all(const DomainSpec& domain);
  static PointSet none(const DomainSpec& domain);

  const DomainSpec& domain() const { return domain_; }
  const std::vector<int>& indices() const { return indices_; }
  const IntervalSet& intervals() const { return intervals_; }

  bool is_empty() const;
  bool contains_index(int i) const;
  bool contains(const Point& p) const;

  static PointSet intersect(const PointSet& a, const PointSet& b);

  std::string to_string() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.domain_ == b.domain_ && a.indices_ == b.indices_ && a.intervals_ == b.intervals_;
  }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

 private:
  DomainSpec domain_;
  std::vector<int> indices_;
  IntervalSet intervals_;
};

}  // namespace absconv
