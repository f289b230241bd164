#pragma once

#include "absconv/instance.hpp"

namespace absconv {

/// One scenario run: named checks plus an overall verdict.  Timing is kept
/// out of the JSON form so identical runs serialize byte-identically.
struct Report {
  enum class Status { pass, fail, not_applicable };

  std::string scenario;
  std::vector<RuleReport> checks;
  Status status = Status::pass;
  double elapsed_ms = 0.0;

  void add(RuleReport r) { checks.push_back(std::move(r)); }
  void finalize();
  bool passed() const { return status != Status::fail; }
};

/// Built-in scenario names, in catalog order.
const std::vector<std::string>& scenario_names();

/// Runs a built-in scenario by name, or loads and checks an instance file
/// when the argument names no catalog entry.
Report run_scenario(const std::string& name_or_path);

/// Runs the checks declared inside an instance file.
Report run_instance_checks(const Instance& ins);

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

/// CSV over [lo, hi] with the given step: one column per named function,
/// exact decimals where possible, "p/q" otherwise.
std::string emit_plot_data(const Instance& ins, const std::vector<std::string>& functions,
                           const Rational& lo, const Rational& hi, const Rational& step);

}  // namespace absconv
