#include "doctest.h"

#include "absconv/scenario.hpp"

using namespace absconv;
using nlohmann::json;

namespace {
std::string data_path(const std::string& name) {
  return std::string(ABSCONV_DATA_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("the shipped counterexample instance resolves fully") {
  Instance ins = load_instance(data_path("fig1.json"));
  CHECK(ins.name == "fig1");
  CHECK(ins.domain.is_real_line());
  REQUIRE(ins.families.count("H") == 1);
  CHECK(ins.family("H")->size() == 4);
  CHECK(ins.subset("A").indices == std::vector<int>{0, 1});
  CHECK(ins.subset("B").indices == std::vector<int>{2, 3});
  CHECK(ins.function("fA").value_at(point1(Rational(0))) == ExtReal(Rational(1)));
  CHECK(ins.checks.size() == 11);

  Report rep = run_instance_checks(ins);
  CHECK(rep.status == Report::Status::pass);
}

TEST_CASE("load errors carry context") {
  CHECK_THROWS_AS(load_instance(data_path("missing.json")), LoadError);

  auto load = [](const char* text) { return instance_from_json(json::parse(text), "t"); };

  CHECK_THROWS_WITH_AS(load(R"({"backend":"finite_points","points":["1"],
                               "params":{"x":"1/0"}})"),
                       doctest::Contains("1/0"), LoadError);
  CHECK_THROWS_WITH_AS(load(R"({"backend":"real_line",
                               "subsets":{"A":{"family":"H","indices":[0]}}})"),
                       doctest::Contains("undefined family"), LoadError);
  CHECK_THROWS_AS(load(R"({"backend":"real_line","families":{"L":["x*x"]}})"), LoadError);
  CHECK_THROWS_AS(load(R"({"backend":"odd"})"), LoadError);
  CHECK_THROWS_AS(load(R"({"backend":"finite_points","points":["1","1"]})"), LoadError);
  CHECK_THROWS_WITH_AS(load(R"({"backend":"finite_points","points":["1"],
                               "functions":{"f":{"envelope_of":"missing"}}})"),
                       doctest::Contains("undefined subset"), LoadError);
}

TEST_CASE("sum-rule fixtures resolve and their checks pass") {
  Report pass = run_scenario(data_path("sum_rule_pass.json"));
  CHECK(pass.status == Report::Status::pass);
  Report fail = run_scenario(data_path("sum_rule_fail.json"));
  CHECK(fail.status == Report::Status::pass);  // the expected hypothesis failure passes
}

TEST_CASE("report serialization is a fixed point") {
  Report rep = run_scenario(data_path("fig1.json"));
  std::string once = report_to_json(rep);
  Report back = report_from_json(once);
  CHECK(report_to_json(back) == once);
  CHECK(back.scenario == rep.scenario);
  CHECK(back.checks.size() == rep.checks.size());
}

TEST_CASE("plot data emits exact decimals") {
  Instance ins = load_instance(data_path("fig1.json"));
  std::string csv = emit_plot_data(ins, {"fA", "fB"}, Rational(-4), Rational(4),
                                   Rational(1, 4));
  std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 34);  // header + 33 samples
  CHECK(csv.rfind("x,fA,fB", 0) == 0);
  CHECK(csv.find("-0.25") != std::string::npos);

  std::string empty = emit_plot_data(ins, {}, Rational(0), Rational(1), Rational(1));
  CHECK(empty.rfind("x\n", 0) == 0);

  // oracle: each emitted row equals direct evaluation
  std::string one = emit_plot_data(ins, {"fA"}, Rational(0), Rational(0), Rational(1));
  CHECK(one == "x,fA\n0,1\n");
}

TEST_CASE("the envelopes hit the published plot coordinates exactly") {
  Instance ins = load_instance(data_path("fig1.json"));
  const TargetFunction& fA = ins.function("fA");
  const TargetFunction& fB = ins.function("fB");
  auto at = [](const TargetFunction& f, long long x) {
    return f.value_at(point1(Rational(x))).finite_value();
  };
  // fA through (-4,-1) (-1,2) (0,1) (1,2) (4,-1)
  CHECK(at(fA, -4) == Rational(-1));
  CHECK(at(fA, -1) == Rational(2));
  CHECK(at(fA, 0) == Rational(1));
  CHECK(at(fA, 1) == Rational(2));
  CHECK(at(fA, 4) == Rational(-1));
  // fB through (-4,0) (-2,0) (0,2) (2,0) (4,0)
  CHECK(at(fB, -4) == Rational(0));
  CHECK(at(fB, -2) == Rational(0));
  CHECK(at(fB, 0) == Rational(2));
  CHECK(at(fB, 2) == Rational(0));
  CHECK(at(fB, 4) == Rational(0));
}
