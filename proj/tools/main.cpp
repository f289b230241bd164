#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "absconv/suite.hpp"

namespace {

using namespace absconv;

// exit codes: 0 all pass, 1 any fail, 2 usage or load error
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void write_out(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << payload;
}

int emit_report(const Report& rep, const std::string& format, const std::string& out_path) {
  if (format == "json")
    write_out(out_path, report_to_json(rep));
  else
    write_out(out_path, report_to_text(rep));
  return rep.passed() ? kPass : kFail;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  auto r = Rational::parse(text);
  if (!r) throw CLI::ValidationError(what, "expected an exact rational like 3/4");
  return *r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for abstract convex analysis on finite families"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* check = app.add_subcommand("check", "load an instance file and run its checks");
  std::string check_path;
  check->add_option("instance", check_path, "instance file (JSON)")->required();

  auto* scenario = app.add_subcommand("scenario", "run a built-in scenario or a file");
  std::string scenario_name;
  bool list_scenarios = false;
  scenario->add_option("name", scenario_name, "scenario name or instance path");
  scenario->add_flag("--list", list_scenarios, "list built-in scenarios");

  auto* suite = app.add_subcommand("suite", "run the randomized property suite");
  std::uint64_t seed = 0;
  int count = 100;
  suite->add_option("--seed", seed, "generator seed")->capture_default_str();
  suite->add_option("--count", count, "number of random instances")->capture_default_str();

  auto* plot = app.add_subcommand("plot-data", "tabulate named functions over a range");
  std::string plot_path, functions_arg, range_arg, step_arg = "1/4";
  plot->add_option("instance", plot_path, "instance file (JSON)")->required();
  plot->add_option("--functions", functions_arg, "comma-separated function names")->required();
  plot->add_option("--range", range_arg, "lo:hi, exact rationals")->required();
  plot->add_option("--step", step_arg, "sampling step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*check) return emit_report(run_scenario(check_path), format, out_path);

    if (*scenario) {
      if (list_scenarios) {
        std::string names;
        for (const std::string& n : scenario_names()) names += n + "\n";
        write_out(out_path, names);
        return kPass;
      }
      if (scenario_name.empty()) {
        std::cerr << "scenario: name required (use --list to enumerate)\n";
        return kUsage;
      }
      return emit_report(run_scenario(scenario_name), format, out_path);
    }

    if (*suite) return emit_report(run_property_suite(seed, count), format, out_path);

    if (*plot) {
      auto colon = range_arg.find(':');
      if (colon == std::string::npos) {
        std::cerr << "plot-data: --range expects lo:hi\n";
        return kUsage;
      }
      Rational lo = parse_rational_arg(range_arg.substr(0, colon), "--range");
      Rational hi = parse_rational_arg(range_arg.substr(colon + 1), "--range");
      Rational step = parse_rational_arg(step_arg, "--step");
      std::vector<std::string> names;
      std::string cur;
      for (char c : functions_arg) {
        if (c == ',') {
          if (!cur.empty()) names.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) names.push_back(cur);
      Instance ins = load_instance(plot_path);
      write_out(out_path, emit_plot_data(ins, names, lo, hi, step));
      return kPass;
    }
  } catch (const LoadError& e) {
    std::cerr << "load error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
