#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "absconv/suite.hpp"

namespace py = pybind11;
using namespace absconv;

namespace {

// Thin, string-exact surface: rationals travel as "p/q" strings so no value
// is ever rounded at the boundary.
Rational rat_arg(const std::string& text) {
  auto r = Rational::parse(text);
  if (!r) throw py::value_error("expected an exact rational like '3/4', got '" + text + "'");
  return *r;
}

Point point_arg(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return point1(rat_arg(obj.cast<std::string>()));
  if (py::isinstance<py::int_>(obj)) return point1(Rational(obj.cast<long long>()));
  Point p;
  for (const auto& c : obj.cast<py::sequence>()) {
    if (py::isinstance<py::int_>(c))
      p.push_back(Rational(c.cast<long long>()));
    else
      p.push_back(rat_arg(c.cast<std::string>()));
  }
  return p;
}

/// An instance plus the main operations, for exploratory use from python.
class Workspace {
 public:
  explicit Workspace(const std::string& path) : ins_(load_instance(path)) {}

  static Workspace from_json(const std::string& text) {
    return Workspace(instance_from_json(nlohmann::json::parse(text), "inline"));
  }

  std::vector<std::string> family_members(const std::string& family) const {
    std::vector<std::string> out;
    for (const auto& m : ins_.family(family)->members()) out.push_back(m.text());
    return out;
  }

  std::vector<std::string> support(const std::string& family, const std::string& function) const {
    SupportSet s = support_set(ins_.family(family), ins_.function(function));
    return member_texts(*s.family, s.indices);
  }

  bool convex(const std::string& family, const std::string& function) const {
    return is_abstract_convex(ins_.family(family), ins_.function(function));
  }

  std::vector<std::string> conjugate_values(const std::string& function,
                                            const std::string& family) const {
    ConjugateTable t = conjugate(ins_.function(function), ins_.family(family));
    std::vector<std::string> out;
    for (const ExtReal& v : t.values()) out.push_back(v.to_string());
    return out;
  }

  std::vector<std::string> subdifferential_at(const std::string& function,
                                              const std::string& family,
                                              const py::object& x) const {
    SubdifferentialSet s =
        subdifferential(ins_.function(function), ins_.family(family), point_arg(x));
    return member_texts(*s.family, s.indices);
  }

  py::object separate(const std::string& A, const std::string& B,
                      const std::string& family) const {
    const FamilyRef& H = ins_.family(family);
    SetSeparation s = separate_sets(H, make_subset(H, ins_.subset(A).indices),
                                    make_subset(H, ins_.subset(B).indices));
    if (!s.witness) return py::none();
    return py::str(point_to_string(*s.witness));
  }

  std::string run_checks() const { return report_to_json(run_instance_checks(ins_)); }

  std::string plot_csv(const std::vector<std::string>& functions, const std::string& lo,
                       const std::string& hi, const std::string& step) const {
    return emit_plot_data(ins_, functions, rat_arg(lo), rat_arg(hi), rat_arg(step));
  }

 private:
  explicit Workspace(Instance ins) : ins_(std::move(ins)) {}

  static std::vector<std::string> member_texts(const FunctionFamily& fam,
                                               const std::vector<int>& idx) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(fam.member(i).text());
    return out;
  }

  Instance ins_;
};

}  // namespace

PYBIND11_MODULE(_absconv, m) {
  m.doc() = "exact abstract convex analysis over finite function families";

  m.def("scenario_names", [] { return scenario_names(); });
  m.def(
      "run_scenario",
      [](const std::string& name) { return report_to_json(run_scenario(name)); },
      py::arg("name"), "run a built-in scenario or an instance file; returns JSON");
  m.def(
      "run_suite",
      [](std::uint64_t seed, int count) {
        return report_to_json(run_property_suite(seed, count));
      },
      py::arg("seed") = 0, py::arg("count") = 100,
      "run the randomized property suite; returns JSON");
  m.def(
      "eval_expr",
      [](const std::string& text, const py::object& x) {
        return parse_expr(text).eval(point_arg(x)).to_string();
      },
      py::arg("text"), py::arg("x"), "exact evaluation of an expression");
  m.def(
      "canonical_expr",
      [](const std::string& text) { return parse_expr(text).to_string(); }, py::arg("text"),
      "parse and reprint an expression in canonical form");

  py::class_<Workspace>(m, "Workspace")
      .def(py::init<const std::string&>(), py::arg("path"))
      .def_static("from_json", &Workspace::from_json, py::arg("text"))
      .def("family_members", &Workspace::family_members, py::arg("family"))
      .def("support", &Workspace::support, py::arg("family"), py::arg("function"))
      .def("convex", &Workspace::convex, py::arg("family"), py::arg("function"))
      .def("conjugate_values", &Workspace::conjugate_values, py::arg("function"),
           py::arg("family"))
      .def("subdifferential_at", &Workspace::subdifferential_at, py::arg("function"),
           py::arg("family"), py::arg("x"))
      .def("separate", &Workspace::separate, py::arg("A"), py::arg("B"), py::arg("family"))
      .def("run_checks", &Workspace::run_checks)
      .def("plot_csv", &Workspace::plot_csv, py::arg("functions"), py::arg("lo"),
           py::arg("hi"), py::arg("step") = "1/4");
}
