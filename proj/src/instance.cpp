#include "absconv/instance.hpp"

#include <fstream>

namespace absconv {

using nlohmann::json;

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      auto r = Rational::parse(v.get<std::string>());
      if (r) return *r;
    } catch (const std::domain_error&) {
    }
    throw LoadError("malformed rational '" + v.get<std::string>() + "'");
  }
  throw LoadError("rationals are integers or \"p/q\" strings, got " + v.dump());
}

Point point_from_json(const json& v) {
  if (v.is_array()) {
    Point p;
    for (const json& c : v) p.push_back(rational_from_json(c));
    return p;
  }
  return point1(rational_from_json(v));
}

Interval interval_from_json(const json& v) {
  if (!v.is_object()) throw LoadError("interval must be an object with lo/hi");
  auto endpoint = [&](const char* key, bool is_lo) -> ExtReal {
    if (!v.contains(key)) return is_lo ? ExtReal::neg_infinity() : ExtReal::pos_infinity();
    const json& e = v.at(key);
    if (e.is_string()) {
      std::string s = e.get<std::string>();
      if (s == "-inf") return ExtReal::neg_infinity();
      if (s == "+inf" || s == "inf") return ExtReal::pos_infinity();
    }
    return ExtReal(rational_from_json(e));
  };
  ExtReal lo = endpoint("lo", true);
  ExtReal hi = endpoint("hi", false);
  bool lc = v.value("lo_closed", false);
  bool hc = v.value("hi_closed", false);
  if (!lo.is_finite()) lc = false;
  if (!hi.is_finite()) hc = false;
  return Interval(lo, hi, lc, hc);
}

namespace {

PointSet point_set_from_json(const json& v, const DomainSpec& dom) {
  if (!v.is_array()) throw LoadError("point set must be an array");
  if (dom.is_real_line()) {
    std::vector<Interval> parts;
    for (const json& e : v) {
      if (e.is_object())
        parts.push_back(interval_from_json(e));
      else
        parts.push_back(Interval::point(rational_from_json(e)));
    }
    return PointSet::real(IntervalSet(std::move(parts)));
  }
  std::vector<int> idx;
  for (const json& e : v) {
    Point p = point_from_json(e);
    auto i = dom.point_index(p);
    if (!i) throw LoadError("point set entry " + point_to_string(p) + " not in the domain");
    idx.push_back(*i);
  }
  return PointSet::finite(dom, std::move(idx));
}

}  // namespace

Instance instance_from_json(const json& doc, const std::string& fallback_name) {
  if (!doc.is_object()) throw LoadError("instance file must be a JSON object");
  Instance ins;
  ins.name = doc.value("name", fallback_name);

  std::string backend = doc.value("backend", "real_line");
  if (backend == "real_line") {
    ins.domain = DomainSpec::real_line();
    if (doc.contains("points")) throw LoadError("real_line instances carry no point list");
  } else if (backend == "finite_points") {
    if (!doc.contains("points")) throw LoadError("finite_points instances need a point list");
    std::vector<Point> pts;
    for (const json& e : doc.at("points")) pts.push_back(point_from_json(e));
    try {
      ins.domain = DomainSpec::grid(std::move(pts));
    } catch (const std::invalid_argument& e) {
      throw LoadError(e.what());
    }
  } else {
    throw LoadError("unknown backend '" + backend + "'");
  }

  if (doc.contains("families")) {
    for (const auto& [key, val] : doc.at("families").items()) {
      if (!val.is_array()) throw LoadError("family '" + key + "' must be an expression list");
      std::vector<std::string> texts;
      for (const json& e : val) texts.push_back(e.get<std::string>());
      try {
        ins.families.emplace(key, make_family_from_texts(ins.domain, texts));
      } catch (const ParseError& e) {
        throw LoadError("family '" + key + "': " + e.what());
      } catch (const std::exception& e) {
        throw LoadError("family '" + key + "': " + e.what());
      }
    }
  }

  if (doc.contains("subsets")) {
    for (const auto& [key, val] : doc.at("subsets").items()) {
      if (!val.is_object() || !val.contains("family"))
        throw LoadError("subset '" + key + "' must name its family");
      std::string fam = val.at("family").get<std::string>();
      auto it = ins.families.find(fam);
      if (it == ins.families.end())
        throw LoadError("subset '" + key + "' references undefined family '" + fam + "'");
      Instance::Subset sub;
      sub.family = fam;
      if (val.contains("indices")) {
        for (const json& e : val.at("indices")) sub.indices.push_back(e.get<int>());
      } else if (val.contains("members")) {
        for (const json& e : val.at("members")) {
          ElementaryFunction f =
              ElementaryFunction::from_text(e.get<std::string>(), ins.domain);
          auto idx = it->second->find(f);
          if (!idx)
            throw LoadError("subset '" + key + "' member " + e.get<std::string>() +
                            " not found in family '" + fam + "'");
          sub.indices.push_back(*idx);
        }
      } else {
        throw LoadError("subset '" + key + "' needs indices or members");
      }
      std::sort(sub.indices.begin(), sub.indices.end());
      sub.indices.erase(std::unique(sub.indices.begin(), sub.indices.end()), sub.indices.end());
      for (int i : sub.indices)
        if (i < 0 || static_cast<std::size_t>(i) >= it->second->size())
          throw LoadError("subset '" + key + "' index out of range");
      ins.subsets.emplace(key, std::move(sub));
    }
  }

  if (doc.contains("point_sets")) {
    for (const auto& [key, val] : doc.at("point_sets").items())
      ins.point_sets.emplace(key, point_set_from_json(val, ins.domain));
  }

  if (doc.contains("functions")) {
    for (const auto& [key, val] : doc.at("functions").items()) {
      if (val.is_string()) {
        try {
          ins.functions.emplace(key,
                                TargetFunction::from_text(val.get<std::string>(), ins.domain));
        } catch (const ParseError& e) {
          throw LoadError("function '" + key + "': " + e.what());
        }
      } else if (val.is_object() && val.contains("envelope_of")) {
        std::string ref = val.at("envelope_of").get<std::string>();
        auto it = ins.subsets.find(ref);
        if (it == ins.subsets.end())
          throw LoadError("function '" + key + "' references undefined subset '" + ref + "'");
        ins.functions.emplace(
            key, TargetFunction::envelope(ins.families.at(it->second.family),
                                          it->second.indices));
      } else if (val.is_object() && val.contains("indicator_of")) {
        std::string ref = val.at("indicator_of").get<std::string>();
        auto it = ins.point_sets.find(ref);
        if (it == ins.point_sets.end())
          throw LoadError("function '" + key + "' references undefined point set '" + ref + "'");
        ins.functions.emplace(key, TargetFunction::indicator(it->second));
      } else {
        throw LoadError("function '" + key + "' must be an expression, envelope_of, or indicator_of");
      }
    }
  }

  if (doc.contains("params")) {
    for (const auto& [key, val] : doc.at("params").items()) {
      if (key == "c_samples") {
        for (const json& e : val) ins.c_samples.push_back(rational_from_json(e));
      } else {
        ins.params.emplace(key, rational_from_json(val));
      }
    }
  }

  if (doc.contains("checks")) {
    for (const json& e : doc.at("checks")) {
      if (!e.is_object() || !e.contains("rule"))
        throw LoadError("each check needs a rule name");
      ins.checks.push_back(e);
    }
  }
  return ins;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open instance file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw LoadError("parse error in " + path + ": " + e.what());
  }
  std::string base = path;
  auto slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  auto dot = base.find_last_of('.');
  if (dot != std::string::npos) base = base.substr(0, dot);
  return instance_from_json(doc, base);
}

const FamilyRef& Instance::family(const std::string& key) const {
  auto it = families.find(key);
  if (it == families.end()) throw LoadError("undefined family '" + key + "'");
  return it->second;
}
const TargetFunction& Instance::function(const std::string& key) const {
  auto it = functions.find(key);
  if (it == functions.end()) throw LoadError("undefined function '" + key + "'");
  return it->second;
}
const Instance::Subset& Instance::subset(const std::string& key) const {
  auto it = subsets.find(key);
  if (it == subsets.end()) throw LoadError("undefined subset '" + key + "'");
  return it->second;
}
const PointSet& Instance::point_set(const std::string& key) const {
  auto it = point_sets.find(key);
  if (it == point_sets.end()) throw LoadError("undefined point set '" + key + "'");
  return it->second;
}
Rational Instance::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw LoadError("missing parameter '" + key + "'");
  return it->second;
}

}  // namespace absconv
