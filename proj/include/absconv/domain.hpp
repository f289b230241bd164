#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absconv/rational.hpp"

namespace absconv {

using Point = std::vector<Rational>;

inline Point point1(const Rational& x) { return Point{x}; }

inline std::string point_to_string(const Point& p) {
  if (p.size() == 1) return p[0].to_string();
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].to_string();
  }
  return s + ")";
}

inline Rational point_norm_squared(const Point& p) {
  Rational s(0);
  for (const Rational& c : p) s += c * c;
  return s;
}

/// Canonical point order: squared norm first, then lexicographic.  Fixes
/// witness tie-breaking so runs are reproducible.
inline bool canonical_point_less(const Point& a, const Point& b) {
  Rational na = point_norm_squared(a), nb = point_norm_squared(b);
  if (na != nb) return na < nb;
  return a < b;
}

/// The evaluation domain: the whole rational line, or an explicit finite list
/// of distinct rational tuples.
struct DomainSpec {
  enum class Backend { real_line, finite_points };
  Backend backend = Backend::real_line;
  int dimension = 1;
  std::vector<Point> points;  // finite_points only

  static DomainSpec real_line() { return DomainSpec{}; }

  static DomainSpec grid(std::vector<Point> pts) {
    DomainSpec d;
    d.backend = Backend::finite_points;
    if (pts.empty()) throw std::invalid_argument("finite domain needs at least one point");
    d.dimension = static_cast<int>(pts.front().size());
    for (const Point& p : pts)
      if (static_cast<int>(p.size()) != d.dimension)
        throw std::invalid_argument("domain points of mixed dimension");
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (pts[i] == pts[j]) throw std::invalid_argument("duplicate domain point");
    d.points = std::move(pts);
    return d;
  }

  static DomainSpec grid1(const std::vector<Rational>& xs) {
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (const Rational& x : xs) pts.push_back(point1(x));
    return grid(std::move(pts));
  }

  bool is_real_line() const { return backend == Backend::real_line; }
  bool is_finite() const { return backend == Backend::finite_points; }
  std::size_t size() const { return points.size(); }

  std::optional<int> point_index(const Point& p) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == p) return static_cast<int>(i);
    return std::nullopt;
  }

  friend bool operator==(const DomainSpec& a, const DomainSpec& b) {
    return a.backend == b.backend && a.dimension == b.dimension && a.points == b.points;
  }
  friend bool operator!=(const DomainSpec& a, const DomainSpec& b) { return !(a == b); }
};

}  // namespace absconv
