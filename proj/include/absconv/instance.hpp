#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "absconv/monotone.hpp"

namespace absconv {

class LoadError : public std::runtime_error {
 public:
  explicit LoadError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A fully resolved instance file: a backend, named families, named
/// functions and point sets, scenario parameters, and a check list.
struct Instance {
  std::string name;
  DomainSpec domain;
  std::map<std::string, FamilyRef> families;

  struct Subset {
    std::string family;
    std::vector<int> indices;
  };
  std::map<std::string, Subset> subsets;
  std::map<std::string, TargetFunction> functions;
  std::map<std::string, PointSet> point_sets;
  std::map<std::string, Rational> params;
  std::vector<Rational> c_samples;
  std::vector<nlohmann::json> checks;

  const FamilyRef& family(const std::string& key) const;
  const TargetFunction& function(const std::string& key) const;
  const Subset& subset(const std::string& key) const;
  const PointSet& point_set(const std::string& key) const;
  Rational param(const std::string& key) const;
};

Instance instance_from_json(const nlohmann::json& doc, const std::string& fallback_name);
Instance load_instance(const std::string& path);

/// Rationals in instance files are integers or exact "p/q" strings.
Rational rational_from_json(const nlohmann::json& v);
Point point_from_json(const nlohmann::json& v);
Interval interval_from_json(const nlohmann::json& v);

}  // namespace absconv
