#include "absconv/scenario.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "absconv/suite.hpp"

namespace absconv {

using nlohmann::json;

void Report::finalize() {
  bool any_fail = false, all_gated = !checks.empty();
  for (const RuleReport& r : checks) {
    if (!r.ok()) any_fail = true;
    if (r.hypothesis != HypothesisStatus::fails) all_gated = false;
  }
  status = any_fail ? Status::fail : (all_gated ? Status::not_applicable : Status::pass);
}

namespace {

const char* status_name(Report::Status s) {
  switch (s) {
    case Report::Status::pass: return "pass";
    case Report::Status::fail: return "fail";
    default: return "not-applicable";
  }
}

json rule_to_json(const RuleReport& r) {
  json j;
  j["rule"] = r.rule;
  j["hypothesis"] = to_string(r.hypothesis);
  j["conclusion"] = to_string(r.conclusion);
  json w = json::array();
  for (const auto& [k, v] : r.witnesses) w.push_back(json::array({k, v}));
  j["witnesses"] = w;
  j["notes"] = r.notes;
  return j;
}

RuleReport rule_from_json(const json& j) {
  RuleReport r;
  r.rule = j.at("rule").get<std::string>();
  std::string h = j.at("hypothesis").get<std::string>();
  r.hypothesis = h == "holds" ? HypothesisStatus::holds
                              : (h == "fails" ? HypothesisStatus::fails
                                              : HypothesisStatus::not_checked);
  std::string c = j.at("conclusion").get<std::string>();
  r.conclusion = c == "equal" ? ConclusionStatus::equal
                              : (c == "strict-inclusion" ? ConclusionStatus::strict_inclusion
                                                         : ConclusionStatus::violated);
  for (const json& w : j.at("witnesses"))
    r.witnesses.emplace_back(w.at(0).get<std::string>(), w.at(1).get<std::string>());
  for (const json& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
  return r;
}

// A scenario check wrapping expectations around op results.
struct Expectation {
  RuleReport rep;

  explicit Expectation(std::string rule) { rep.rule = std::move(rule); }

  void require(bool ok, const std::string& what) {
    if (!ok) {
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("failed", what);
    }
  }
  void attach(const RuleReport& inner) {
    for (const auto& [k, v] : inner.witnesses) rep.witnesses.emplace_back(k, v);
    for (const auto& n : inner.notes) rep.notes.push_back(n);
  }
};

}  // namespace

std::string report_to_json(const Report& r) {
  json j;
  j["scenario"] = r.scenario;
  j["status"] = status_name(r.status);
  json cs = json::array();
  for (const RuleReport& c : r.checks) cs.push_back(rule_to_json(c));
  j["checks"] = cs;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  json j = json::parse(text);
  Report r;
  r.scenario = j.at("scenario").get<std::string>();
  std::string s = j.at("status").get<std::string>();
  r.status = s == "pass" ? Report::Status::pass
                         : (s == "fail" ? Report::Status::fail
                                        : Report::Status::not_applicable);
  for (const json& c : j.at("checks")) r.checks.push_back(rule_from_json(c));
  return r;
}

std::string report_to_text(const Report& r) {
  std::string out = "scenario " + r.scenario + ": " + status_name(r.status) + "\n";
  for (const RuleReport& c : r.checks) {
    out += "  [" + std::string(c.ok() ? "ok" : "FAIL") + "] " + c.rule +
           " (hypothesis " + to_string(c.hypothesis) + ", conclusion " +
           to_string(c.conclusion) + ")\n";
    for (const auto& [k, v] : c.witnesses) out += "      " + k + ": " + v + "\n";
    for (const auto& n : c.notes) out += "      note: " + n + "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "  elapsed %.1f ms\n", r.elapsed_ms);
  out += buf;
  return out;
}

// ---------------------------------------------------------------------------
// built-in scenarios
// ---------------------------------------------------------------------------

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

struct Fig1 {
  FamilyRef H;
  SupportSet A, B;
  TargetFunction fA, fB;
};

Fig1 make_fig1() {
  FamilyRef H = make_family_from_texts(
      DomainSpec::real_line(), {"-abs(x-1)+2", "-abs(x+1)+2", "-abs(x)+2", "0"});
  Fig1 f{H, make_subset(H, {0, 1}), make_subset(H, {2, 3}),
         TargetFunction::envelope(H, {0, 1}), TargetFunction::envelope(H, {2, 3})};
  return f;
}

struct Fig2 {
  FamilyRef L, G;
  TargetFunction f;  // |x| as the envelope of G
};

Fig2 make_fig2() {
  DomainSpec dom = DomainSpec::real_line();
  FamilyRef L = make_family_from_texts(dom, {"x", "-x", "max(0,x)", "min(0,x)", "0"});
  FamilyRef G = make_family_from_texts(dom, {"x", "-x"});
  return {L, G, TargetFunction::envelope(G, {0, 1})};
}

Report scenario_fig1() {
  Report rep;
  rep.scenario = "fig1-separation";
  Fig1 fig = make_fig1();

  {
    Expectation e("strict-dominance regions, bit-exact");
    auto region = [&](int member, const TargetFunction& f) {
      return pl_strict_above_region(fig.H->member(member).pl(), f.pl());
    };
    IntervalSet r1 = region(2, fig.fA);
    e.require(r1 == IntervalSet({Interval::open(q(-1, 2), q(1, 2))}),
              "{-|x|+2 > fA} = (-1/2, 1/2), got " + r1.to_string());
    IntervalSet r2 = region(3, fig.fA);
    e.require(r2 == IntervalSet({Interval::below(q(-3), false), Interval::above(q(3), false)}),
              "{0 > fA} = (-inf,-3) U (3,+inf), got " + r2.to_string());
    IntervalSet r3 = region(0, fig.fB);
    e.require(r3 == IntervalSet({Interval::open(q(1, 2), q(3))}),
              "{-|x-1|+2 > fB} = (1/2, 3), got " + r3.to_string());
    IntervalSet r4 = region(1, fig.fB);
    e.require(r4 == IntervalSet({Interval::open(q(-3), q(-1, 2))}),
              "{-|x+1|+2 > fB} = (-3, -1/2), got " + r4.to_string());
    e.rep.witness("regions", r1.to_string() + "; " + r2.to_string() + "; " + r3.to_string() +
                                 "; " + r4.to_string());
    rep.add(e.rep);
  }
  {
    Expectation e("A and B are hull-closed and disjoint");
    e.require(support_set(fig.H, fig.fA).indices == fig.A.indices, "supp(fA) = A");
    e.require(support_set(fig.H, fig.fB).indices == fig.B.indices, "supp(fB) = B");
    e.require(is_abstract_convex(fig.H, fig.fA), "fA is H-convex");
    e.require(is_abstract_convex(fig.H, fig.fB), "fB is H-convex");
    e.require(co_set(fig.H, fig.A).indices == fig.A.indices, "co(A) = A");
    e.require(co_set(fig.H, fig.B).indices == fig.B.indices, "co(B) = B");
    rep.add(e.rep);
  }
  {
    Expectation e("no point separates B from A");
    SetSeparation s = separate_sets(fig.H, fig.A, fig.B);
    e.require(!s.witness.has_value(), "separator must not exist");
    e.require(s.notes.empty(), "preconditions hold");
    rep.add(e.rep);
  }
  {
    Expectation e("no point separates A from B");
    SetSeparation s = separate_sets(fig.H, fig.B, fig.A);
    e.require(!s.witness.has_value(), "separator must not exist");
    rep.add(e.rep);
  }
  {
    Expectation e("point-from-set separation still works");
    Point w = separate_point_from_set(fig.H, fig.A, fig.H->member(2));
    e.require(w == point1(q(0)), "midpoint of (-1/2, 1/2), got " + point_to_string(w));
    rep.add(e.rep);
  }
  rep.finalize();
  return rep;
}

Report scenario_fig2() {
  Report rep;
  rep.scenario = "fig2-maxrule";
  Fig2 fig = make_fig2();
  Point one = point1(q(1));

  RuleReport inner = max_rule_verify(fig.G, fig.L, one);
  {
    Expectation e("max rule is strict at x = 1");
    e.require(inner.ok(), "inclusion holds");
    e.require(inner.conclusion == ConclusionStatus::strict_inclusion, "inclusion is strict");
    e.attach(inner);
    rep.add(e.rep);
  }
  {
    Expectation e("the strict member is max(0,x) - 1 with witness y = -1");
    FamilyRef L1 = family_pin(fig.L, one);
    ElementaryFunction u = ElementaryFunction::from_text("max(0,x) - 1", fig.L->domain());
    auto ui = L1->find(u);
    e.require(ui.has_value(), "pinned family contains max(0,x) - 1");
    if (ui) {
      SubdifferentialSet sd = subdifferential(fig.f, L1, one);
      e.require(sd.contains(*ui), "u is a pinned subgradient of |x| at 1");
      ElementaryFunction g1 = ElementaryFunction::from_text("x - 1", fig.L->domain());
      auto gi = L1->find(g1);
      e.require(gi.has_value(), "pinned active member x - 1 present");
      SupportSet hull = co_set(L1, make_subset(L1, {*gi}));
      e.require(!hull.contains(*ui), "u lies outside the pinned hull of the active set");
      Point w = separate_point_from_set(L1, hull, u);
      e.require(w == point1(q(-1)), "separating point -1, got " + point_to_string(w));
      // u supports the envelope but not the single active member
      TargetFunction g1f = TargetFunction::from_text("x", fig.L->domain());
      e.require(!subdifferential(g1f, L1, one).contains(*ui),
                "u is not a pinned subgradient of the active member alone");
    }
    rep.add(e.rep);
  }
  rep.finalize();
  return rep;
}

Report scenario_corpus(const std::string& name, int count,
                       const std::function<void(Expectation&, const RandomInstance&,
                                                std::uint64_t)>& body) {
  Report rep;
  rep.scenario = name;
  Expectation e(name + " over " + std::to_string(count) + " seeded instances");
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
    RandomInstance ins = make_random_instance(seed);
    body(e, ins, seed);
  }
  rep.add(e.rep);
  rep.finalize();
  return rep;
}

Report scenario_moreau() {
  return scenario_corpus("moreau", 120, [](Expectation& e, const RandomInstance& ins,
                                           std::uint64_t seed) {
    for (const TargetFunction* f : {&ins.g, &ins.f1}) {
      RuleReport r = moreau_verify(*f, ins.L1, ins.x);
      e.require(r.ok(), "seed " + std::to_string(seed));
    }
  });
}

Report scenario_epi_conjugate() {
  return scenario_corpus("epi-conjugate", 100,
                         [](Expectation& e, const RandomInstance& ins, std::uint64_t seed) {
                           e.require(epi_conjugate_check(ins.g, ins.L1, {}).ok(),
                                     "seed " + std::to_string(seed) + " on g");
                           e.require(epi_conjugate_check(ins.f1, ins.L1, {}).ok(),
                                     "seed " + std::to_string(seed) + " on f1");
                         });
}

Report scenario_restriction() {
  return scenario_corpus(
      "restriction", 100, [](Expectation& e, const RandomInstance& ins, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::vector<ElementaryFunction> sub;
        for (std::size_t i = 0; i < ins.L1->size(); ++i)
          if (rng() % 2) sub.push_back(ins.L1->member(static_cast<int>(i)));
        if (sub.empty()) sub.push_back(ins.L1->member(0));
        FamilyRef L1sub = make_family(ins.L1->domain(), sub);
        e.require(restriction_check(ins.g, L1sub, ins.L1, ins.x).ok(),
                  "seed " + std::to_string(seed));
      });
}

Report scenario_shift_rules() {
  Report rep;
  rep.scenario = "shift-rules";
  {
    // pinning on the worked max-rule instance: y = 0, x = 1
    Expectation e("pinning identity on the |x| instance");
    Fig2 fig = make_fig2();
    RuleReport r = shift_rule_check(fig.f, fig.L,
                                    ElementaryFunction::from_text("x", fig.L->domain()),
                                    point1(q(0)), point1(q(1)));
    e.require(r.ok(), "identities hold");
    rep.add(e.rep);
  }
  Report corpus = scenario_corpus(
      "shift-rules-corpus", 100,
      [](Expectation& e, const RandomInstance& ins, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        const ElementaryFunction& u =
            ins.L1->member(static_cast<int>(rng() % ins.L1->size()));
        Point y = ins.L1->domain().points[rng() % ins.L1->domain().size()];
        e.require(shift_rule_check(ins.g, ins.L1, u, y, ins.x).ok(),
                  "seed " + std::to_string(seed));
      });
  rep.add(corpus.checks.front());
  rep.finalize();
  return rep;
}

Report scenario_sum_rule() {
  Report rep;
  rep.scenario = "sum-rule";
  {
    Expectation e("fixture with the hypothesis holding (grid, |x| + |x-1|)");
    DomainSpec dom = DomainSpec::grid1({q(-2), q(-1), q(0), q(1), q(2)});
    FamilyRef L = make_family_from_texts(dom, {"-x", "0", "x"});
    TargetFunction f1 = TargetFunction::from_text("abs(x)", dom);
    TargetFunction f2 = TargetFunction::from_text("abs(x-1)", dom);
    SumRuleResult r = sum_rule_verify(f1, L, f2, L, point1(q(0)));
    e.require(r.report.hypothesis == HypothesisStatus::holds, "hypothesis holds");
    e.require(r.report.conclusion == ConclusionStatus::equal, "exact set equality");
    // ground truth fixed by enumeration: {-2x, -x, 0}
    std::vector<int> expected;
    for (const char* t : {"-2*x", "-x", "0"}) {
      auto i = r.sum.family->find(ElementaryFunction::from_text(t, dom));
      e.require(i.has_value(), std::string("summed family contains ") + t);
      if (i) expected.push_back(*i);
    }
    std::sort(expected.begin(), expected.end());
    e.require(r.combined == expected, "combined subdifferential matches the oracle");
    e.require(r.minkowski == expected, "minkowski sum matches the oracle");
    rep.add(e.rep);
  }
  {
    Expectation e("fixture with the hypothesis failing (indicator vs zero)");
    DomainSpec dom = DomainSpec::grid1({q(-1), q(1)});
    FamilyRef L = make_family_from_texts(dom, {"x"});
    TargetFunction f1 = TargetFunction::indicator(PointSet::finite(dom, {0}));
    TargetFunction f2 = TargetFunction::from_text("0", dom);
    SumRuleResult r = sum_rule_verify(f1, L, f2, L, point1(q(-1)));
    e.require(r.report.hypothesis == HypothesisStatus::fails, "hypothesis fails");
    e.require(r.report.conclusion == ConclusionStatus::strict_inclusion,
              "only the inclusion survives");
    e.require(r.report.ok(), "the report is not a failure");
    e.require(r.minkowski.empty(), "no split subgradients");
    e.require(r.combined.size() == 1, "2x is a subgradient of the sum");
    rep.add(e.rep);
  }
  Report corpus = scenario_corpus(
      "sum-rule-corpus", 100, [](Expectation& e, const RandomInstance& ins, std::uint64_t seed) {
        e.require(sum_rule_verify(ins.f1, ins.L1, ins.f2, ins.L2, ins.x).report.ok(),
                  "seed " + std::to_string(seed));
      });
  rep.add(corpus.checks.front());
  rep.finalize();
  return rep;
}

Report scenario_composition() {
  Report rep;
  rep.scenario = "composition";
  DomainSpec dom = DomainSpec::grid1({q(-1), q(0), q(1)});
  FamilyRef L = make_family_from_texts(dom, {"x", "abs(x)", "0"});
  TargetFunction f = TargetFunction::from_text("abs(x)", dom);
  {
    Expectation e("identity map gives equality");
    RuleReport r = composition_subdiff_verify(f, L, {0, 1, 2}, dom, point1(q(1)));
    e.require(r.conclusion == ConclusionStatus::equal, "equality");
    rep.add(e.rep);
  }
  {
    Expectation e("surjective map gives equality");
    RuleReport r = composition_subdiff_verify(f, L, {2, 1, 0}, dom, point1(q(1)));
    e.require(r.hypothesis == HypothesisStatus::holds, "map is onto");
    e.require(r.conclusion == ConclusionStatus::equal, "equality");
    rep.add(e.rep);
  }
  {
    Expectation e("constant map keeps the inclusion");
    RuleReport r = composition_subdiff_verify(f, L, {1, 1, 1}, dom, point1(q(0)));
    e.require(r.hypothesis == HypothesisStatus::fails, "map is not onto");
    e.require(r.ok(), "inclusion verified");
    rep.add(e.rep);
  }
  Report corpus = scenario_corpus(
      "composition-corpus", 100,
      [](Expectation& e, const RandomInstance& ins, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::size_t n = ins.L1->domain().size();
        std::vector<int> map;
        for (std::size_t i = 0; i < n; ++i) map.push_back(static_cast<int>(rng() % n));
        int xi = *ins.L1->domain().point_index(ins.x);
        map[static_cast<std::size_t>(xi)] = xi;
        e.require(
            composition_subdiff_verify(ins.g, ins.L1, map, ins.L1->domain(), ins.x).ok(),
            "seed " + std::to_string(seed));
      });
  rep.add(corpus.checks.front());
  rep.finalize();
  return rep;
}

Report scenario_normal_sum() {
  Report rep;
  rep.scenario = "normal-sum";
  {
    Expectation e("boundary point of an interval intersection");
    DomainSpec dom = DomainSpec::grid1({q(-2), q(-1), q(0), q(1), q(2)});
    FamilyRef L = make_family_from_texts(dom, {"-x", "0", "x"});
    PointSet C = PointSet::finite(dom, {1, 2, 3});  // [-1, 1]
    RuleReport r = normal_sum_check(C, L, C, L, point1(q(1)));
    e.require(r.hypothesis == HypothesisStatus::holds, "hypothesis holds");
    e.require(r.conclusion == ConclusionStatus::equal, "exact equality");
    RuleReport off = normal_sum_check(C, L, C, L, point1(q(2)));
    e.require(off.ok(), "off-set convention");
    rep.add(e.rep);
  }
  Report corpus = scenario_corpus(
      "normal-sum-corpus", 80, [](Expectation& e, const RandomInstance& ins, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::vector<int> yidx, zidx;
        for (std::size_t i = 0; i < ins.L1->domain().size(); ++i) {
          if (rng() % 2) yidx.push_back(static_cast<int>(i));
          if (rng() % 2) zidx.push_back(static_cast<int>(i));
        }
        if (yidx.empty()) yidx.push_back(0);
        if (zidx.empty()) zidx.push_back(0);
        PointSet C = point_set_hull(ins.L1, PointSet::finite(ins.L1->domain(), yidx));
        PointSet D = point_set_hull(ins.L2, PointSet::finite(ins.L2->domain(), zidx));
        e.require(normal_sum_check(C, ins.L1, D, ins.L2, ins.x).ok(),
                  "seed " + std::to_string(seed));
      });
  rep.add(corpus.checks.front());
  rep.finalize();
  return rep;
}

Report scenario_monotone_algebra() {
  Report rep;
  rep.scenario = "monotone-algebra";
  DomainSpec dom = DomainSpec::grid1({q(-2), q(-1), q(0), q(1), q(2)});
  FamilyRef L = make_family_from_texts(dom, {"-x", "0", "x"});
  {
    Expectation e("empty operator is monotone");
    e.require(is_monotone(OperatorGraph(L, {})).ok(), "vacuous");
    rep.add(e.rep);
  }
  {
    Expectation e("crossing pair is refused with a witness");
    // (0, x) and (1, -x): gap 0 - 1 + (-1) - 0 = -2
    int x0 = *dom.point_index(point1(q(0)));
    int x1 = *dom.point_index(point1(q(1)));
    int mx = *L->find(ElementaryFunction::from_text("x", dom));
    int mnx = *L->find(ElementaryFunction::from_text("-x", dom));
    RuleReport r = is_monotone(OperatorGraph(L, {{x0, mx}, {x1, mnx}}));
    e.require(r.conclusion == ConclusionStatus::violated, "violation detected");
    e.require(r.witnesses.size() == 4, "witness quadruple reported");
    rep.add(e.rep);
  }
  {
    Expectation e("zero and one-sided combinations");
    TargetFunction f = TargetFunction::from_text("abs(x)", dom);
    OperatorGraph T = subdifferential_operator(f, L);
    OperatorGraph zeroed = combine_operators(q(0), T, q(0), T);
    e.require(is_monotone(zeroed).ok(), "zero combination monotone");
    e.require(zeroed.family()->size() == 1, "all images collapse to the zero function");
    OperatorGraph one_sided = combine_operators(q(1), T, q(0), T);
    e.require(is_monotone(one_sided).ok(), "one-sided combination monotone");
    e.require(one_sided.pairs().size() == T.pairs().size(), "pair structure preserved");
    rep.add(e.rep);
  }
  Report corpus = scenario_corpus(
      "monotone-corpus", 80, [](Expectation& e, const RandomInstance& ins, std::uint64_t seed) {
        OperatorGraph T1 = subdifferential_operator(ins.f1, ins.L1);
        OperatorGraph T2 = subdifferential_operator(ins.f2, ins.L2);
        e.require(is_monotone(T1).ok(), "seed " + std::to_string(seed) + " T1");
        e.require(is_monotone(inverse_operator(T1)).ok(),
                  "seed " + std::to_string(seed) + " inverse");
        e.require(inverse_operator(inverse_operator(T1)) == T1,
                  "seed " + std::to_string(seed) + " involution");
        std::mt19937_64 rng(seed);
        Rational c1(static_cast<long long>(rng() % 4)), c2(static_cast<long long>(rng() % 4));
        e.require(is_monotone(combine_operators(c1, T1, c2, T2)).ok(),
                  "seed " + std::to_string(seed) + " combination");
      });
  rep.add(corpus.checks.front());
  rep.finalize();
  return rep;
}

struct DeskFixture {
  DomainSpec dom;
  FamilyRef L, Lin;
  TargetFunction f;
};

// Lin samples the linear functions plus the one cone the check needs; mixing
// cones centered at different points breaks the support-sum condition.
DeskFixture make_desk_fixture(const std::string& cone_text) {
  DeskFixture d{DomainSpec::grid1({q(-2), q(-1), q(0), q(1), q(2)}), nullptr, nullptr,
                TargetFunction::neg_infinity(DomainSpec::real_line())};
  d.L = make_family_from_texts(d.dom, {"-x", "0", "x"});
  d.Lin = make_family_from_texts(d.dom, {"0", "x", "-x", cone_text});
  d.f = TargetFunction::from_text("abs(x)", d.dom);
  return d;
}

Report scenario_maximality() {
  Report rep;
  rep.scenario = "maximality";
  DeskFixture d = make_desk_fixture("1*abs(x - 0)");
  {
    Expectation e("assumption holds on the fixture");
    RuleReport a = assumption_check(d.f, d.L, d.Lin, point1(q(0)), q(1));
    e.require(a.hypothesis == HypothesisStatus::holds, "bounded and support-sum convex");
    e.attach(a);
    rep.add(e.rep);
  }
  {
    Expectation e("subdifferential operator is maximal within the full grid");
    OperatorGraph T = subdifferential_operator(d.f, d.L);
    e.require(is_monotone(T).ok(), "monotone");
    RuleReport m = is_maximal_within(T, CandidateSet::full_grid(T));
    e.require(m.ok(), "maximal");
    e.require(is_maximal_within(inverse_operator(T), CandidateSet::full_grid(T)).ok(),
              "the inverse is maximal within the transposed grid");
    e.attach(m);
    rep.add(e.rep);
  }
  {
    Expectation e("maximality also holds over the widened family");
    std::vector<ElementaryFunction> joined = d.L->members();
    for (const auto& m : d.Lin->members()) joined.push_back(m);
    FamilyRef LLin = make_family(d.dom, joined);
    OperatorGraph T = subdifferential_operator(d.f, LLin);
    e.require(is_monotone(T).ok(), "monotone over L with the linear sample");
    e.require(is_maximal_within(T, CandidateSet::full_grid(T)).ok(),
              "maximal within the widened grid");
    rep.add(e.rep);
  }
  {
    Expectation e("a single pair in a rich grid is not maximal");
    OperatorGraph T(d.L, {{0, 0}});
    RuleReport m = is_maximal_within(T, CandidateSet::full_grid(T));
    e.require(m.conclusion == ConclusionStatus::violated, "extendable pair reported");
    RuleReport self = is_maximal_within(T, CandidateSet{T.pairs(), "the graph itself"});
    e.require(self.ok(), "trivially maximal within itself");
    rep.add(e.rep);
  }
  rep.finalize();
  return rep;
}

Report scenario_bronsted() {
  Report rep;
  rep.scenario = "bronsted-rockafellar";
  DeskFixture d = make_desk_fixture("1*abs(x - 1)");
  int v0 = *d.L->find(ElementaryFunction::from_text("0", d.dom));
  {
    Expectation e("zero slack returns (y, v, 0)");
    BronstedResult r =
        bronsted_rockafellar_search(d.f, d.L, d.Lin, point1(q(0)), v0, q(1), q(1));
    e.require(r.witness.has_value(), "witness exists");
    if (r.witness) {
      e.require(r.witness->z == point1(q(0)), "z = y");
      e.require(r.witness->slope == q(0), "no linear correction");
      e.require(r.sum.family->member(r.witness->w_index)
                    .same_function(ElementaryFunction::from_text("0", d.dom)),
                "w = v");
    }
    rep.add(e.rep);
  }
  {
    Expectation e("positive slack trades for an exact subgradient nearby");
    BronstedResult r =
        bronsted_rockafellar_search(d.f, d.L, d.Lin, point1(q(1)), v0, q(1), q(1));
    e.require(r.witness.has_value(), "witness exists");
    if (r.witness) {
      e.require((r.witness->z[0] - q(1)).abs() <= q(1), "|z - y| <= lambda");
      e.require(r.witness->slope.abs() <= q(1), "|p| <= mu");
      e.attach(r.report);
    }
    rep.add(e.rep);
  }
  {
    Expectation e("violated slack precondition is an error");
    bool threw = false;
    try {
      bronsted_rockafellar_search(d.f, d.L, d.Lin, point1(q(2)), v0, q(1, 4), q(1, 4));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    e.require(threw, "slack check rejects lambda*mu below the gap");
    rep.add(e.rep);
  }
  rep.finalize();
  return rep;
}

Report scenario_zero_subgradient() {
  Report rep;
  rep.scenario = "zero-subgradient";
  DeskFixture d = make_desk_fixture("1*abs(x - 0)");
  {
    Expectation e("|x| satisfies the variational inequality and the conclusion");
    RuleReport r = zero_subgradient_check(d.f, d.L, d.Lin);
    e.require(r.hypothesis == HypothesisStatus::holds, "hypothesis holds");
    e.require(r.conclusion == ConclusionStatus::equal, "0 is a subgradient at 0");
    rep.add(e.rep);
  }
  {
    Expectation e("f = x with L = {x} is not applicable");
    FamilyRef L = make_family_from_texts(d.dom, {"x"});
    RuleReport r = zero_subgradient_check(TargetFunction::from_text("x", d.dom), L,
                                          make_family_from_texts(d.dom, {"0"}));
    e.require(r.hypothesis == HypothesisStatus::fails, "hypothesis fails at x = -1");
    e.require(r.ok(), "reported as not applicable, not as a failure");
    rep.add(e.rep);
  }
  {
    Expectation e("a nonnegative member minimized at the origin");
    FamilyRef L = make_family_from_texts(d.dom, {"abs(x)", "0"});
    RuleReport r = zero_subgradient_check(TargetFunction::from_text("abs(x)", d.dom), L,
                                          make_family_from_texts(d.dom, {"0"}));
    e.require(r.hypothesis == HypothesisStatus::holds, "hypothesis holds");
    e.require(r.conclusion == ConclusionStatus::equal, "conclusion holds");
    rep.add(e.rep);
  }
  rep.finalize();
  return rep;
}

using ScenarioFn = Report (*)();

const std::vector<std::pair<std::string, ScenarioFn>>& catalog() {
  static const std::vector<std::pair<std::string, ScenarioFn>> entries = {
      {"fig1-separation", scenario_fig1},
      {"fig2-maxrule", scenario_fig2},
      {"moreau", scenario_moreau},
      {"epi-conjugate", scenario_epi_conjugate},
      {"restriction", scenario_restriction},
      {"shift-rules", scenario_shift_rules},
      {"sum-rule", scenario_sum_rule},
      {"composition", scenario_composition},
      {"normal-sum", scenario_normal_sum},
      {"monotone-algebra", scenario_monotone_algebra},
      {"maximality", scenario_maximality},
      {"bronsted-rockafellar", scenario_bronsted},
      {"zero-subgradient", scenario_zero_subgradient},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : catalog()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_scenario(const std::string& name_or_path) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& [name, fn] : catalog()) {
    if (name == name_or_path) {
      Report r = fn();
      r.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      return r;
    }
  }
  Instance ins = load_instance(name_or_path);
  Report r = run_instance_checks(ins);
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

// ---------------------------------------------------------------------------
// instance-file checks
// ---------------------------------------------------------------------------

namespace {

Point point_arg(const Instance& ins, const json& check, const std::string& key) {
  if (check.contains(key)) return point_from_json(check.at(key));
  return point1(ins.param(key));
}

std::string str_arg(const json& check, const std::string& key, const std::string& fallback) {
  return check.value(key, fallback);
}

RuleReport run_one_check(const Instance& ins, const json& check) {
  std::string rule = check.at("rule").get<std::string>();

  if (rule == "support-set") {
    Expectation e("support-set of " + str_arg(check, "f", "f"));
    SupportSet s = support_set(ins.family(str_arg(check, "H", "H")),
                               ins.function(str_arg(check, "f", "f")));
    e.rep.witness("support", s.to_string());
    if (check.contains("expect")) {
      std::vector<int> want;
      for (const json& t : check.at("expect")) {
        auto i = s.family->find(
            ElementaryFunction::from_text(t.get<std::string>(), ins.domain));
        e.require(i.has_value(), "expected member exists: " + t.get<std::string>());
        if (i) want.push_back(*i);
      }
      std::sort(want.begin(), want.end());
      e.require(s.indices == want, "support set matches");
    }
    return e.rep;
  }
  if (rule == "convexity") {
    Expectation e("convexity of " + str_arg(check, "f", "f"));
    bool conv = is_abstract_convex(ins.family(str_arg(check, "H", "H")),
                                   ins.function(str_arg(check, "f", "f")));
    e.rep.witness("convex", conv ? "true" : "false");
    if (check.contains("expect")) e.require(conv == check.at("expect").get<bool>(), "matches");
    return e.rep;
  }
  if (rule == "strict-region") {
    Expectation e("strict region of " + check.at("upper").get<std::string>());
    ElementaryFunction upper =
        ElementaryFunction::from_text(check.at("upper").get<std::string>(), ins.domain);
    const TargetFunction& lower = ins.function(check.at("lower").get<std::string>());
    PointSet region = member_strict_above(ins.domain, upper, lower);
    e.rep.witness("region", region.to_string());
    if (check.contains("expect")) {
      if (ins.domain.is_real_line()) {
        std::vector<Interval> parts;
        for (const json& iv : check.at("expect")) parts.push_back(interval_from_json(iv));
        e.require(region.intervals() == IntervalSet(parts), "region matches");
      }
    }
    return e.rep;
  }
  if (rule == "separation") {
    Expectation e("separation of " + str_arg(check, "B", "B") + " from " +
                  str_arg(check, "A", "A"));
    const auto& A = ins.subset(str_arg(check, "A", "A"));
    const auto& B = ins.subset(str_arg(check, "B", "B"));
    const FamilyRef& H = ins.family(str_arg(check, "H", "H"));
    SetSeparation s = separate_sets(H, make_subset(H, A.indices), make_subset(H, B.indices));
    for (const auto& [m, region] : s.regions)
      e.rep.witness("region of " + H->member(m).text(), region.to_string());
    e.rep.witness("witness", s.witness ? point_to_string(*s.witness) : "none");
    for (const auto& n : s.notes) e.rep.note(n);
    if (check.contains("expect")) {
      std::string want = check.at("expect").get<std::string>();
      e.require((want == "none") == !s.witness.has_value(), "separator expectation");
    }
    return e.rep;
  }
  if (rule == "point-separation") {
    Expectation e("point separation");
    const auto& U = ins.subset(str_arg(check, "U", "U"));
    const FamilyRef& H = ins.family(str_arg(check, "H", "H"));
    ElementaryFunction l =
        ElementaryFunction::from_text(check.at("l").get<std::string>(), ins.domain);
    Point w = separate_point_from_set(H, make_subset(H, U.indices), l);
    e.rep.witness("witness", point_to_string(w));
    if (check.contains("expect")) e.require(w == point_from_json(check.at("expect")), "matches");
    return e.rep;
  }
  if (rule == "moreau")
    return moreau_verify(ins.function(str_arg(check, "f", "f")),
                         ins.family(str_arg(check, "L", "L")), point_arg(ins, check, "x"));
  if (rule == "epi-conjugate")
    return epi_conjugate_check(ins.function(str_arg(check, "f", "f")),
                               ins.family(str_arg(check, "L", "L")), {});
  if (rule == "normal-subdiff")
    return normal_subdiff_check(ins.function(str_arg(check, "f", "f")),
                                ins.family(str_arg(check, "L", "L")),
                                point_arg(ins, check, "x"), ins.c_samples);
  if (rule == "restriction")
    return restriction_check(ins.function(str_arg(check, "f", "f")),
                             ins.family(str_arg(check, "L1", "L1")),
                             ins.family(str_arg(check, "L2", "L2")),
                             point_arg(ins, check, "x"));
  if (rule == "shift-rules")
    return shift_rule_check(
        ins.function(str_arg(check, "f", "f")), ins.family(str_arg(check, "L", "L")),
        ElementaryFunction::from_text(check.at("u").get<std::string>(), ins.domain),
        point_arg(ins, check, "y"), point_arg(ins, check, "x"));
  if (rule == "max-rule")
    return max_rule_verify(ins.family(str_arg(check, "G", "G")),
                           ins.family(str_arg(check, "L", "L")), point_arg(ins, check, "x"));
  if (rule == "composition") {
    std::vector<Point> ypts;
    for (const json& p : check.at("points")) ypts.push_back(point_from_json(p));
    std::vector<int> map;
    for (const json& m : check.at("map")) map.push_back(m.get<int>());
    return composition_subdiff_verify(ins.function(str_arg(check, "f", "f")),
                                      ins.family(str_arg(check, "L", "L")), map,
                                      DomainSpec::grid(ypts), point_arg(ins, check, "x"));
  }
  if (rule == "conjugate-sum") {
    ConjugateSumResult r = conjugate_sum_check(
        ins.function(str_arg(check, "f1", "f1")), ins.family(str_arg(check, "L1", "L1")),
        ins.function(str_arg(check, "f2", "f2")), ins.family(str_arg(check, "L2", "L2")));
    if (check.contains("expect_hypothesis")) {
      Expectation e("conjugate-sum hypothesis expectation");
      e.attach(r.report);
      e.require(r.hypothesis == check.at("expect_hypothesis").get<bool>(),
                "hypothesis as expected");
      e.rep.note(std::string("inner hypothesis: ") + to_string(r.report.hypothesis));
      return e.rep;
    }
    return r.report;
  }
  if (rule == "sum-rule") {
    SumRuleResult r = sum_rule_verify(
        ins.function(str_arg(check, "f1", "f1")), ins.family(str_arg(check, "L1", "L1")),
        ins.function(str_arg(check, "f2", "f2")), ins.family(str_arg(check, "L2", "L2")),
        point_arg(ins, check, "x"));
    if (check.contains("expect_hypothesis")) {
      Expectation e("sum-rule hypothesis expectation");
      e.attach(r.report);
      e.require((r.report.hypothesis == HypothesisStatus::holds) ==
                    check.at("expect_hypothesis").get<bool>(),
                "hypothesis as expected");
      e.require(r.report.ok(), "rule report passes");
      e.rep.note(std::string("inner hypothesis: ") + to_string(r.report.hypothesis));
      return e.rep;
    }
    return r.report;
  }
  if (rule == "normal-sum")
    return normal_sum_check(ins.point_set(str_arg(check, "C", "C")),
                            ins.family(str_arg(check, "L1", "L1")),
                            ins.point_set(str_arg(check, "D", "D")),
                            ins.family(str_arg(check, "L2", "L2")),
                            point_arg(ins, check, "x"));
  if (rule == "monotone")
    return is_monotone(subdifferential_operator(ins.function(str_arg(check, "f", "f")),
                                                ins.family(str_arg(check, "L", "L"))));
  if (rule == "maximality") {
    OperatorGraph T = subdifferential_operator(ins.function(str_arg(check, "f", "f")),
                                               ins.family(str_arg(check, "L", "L")));
    return is_maximal_within(T, CandidateSet::full_grid(T));
  }
  if (rule == "assumption")
    return assumption_check(ins.function(str_arg(check, "f", "f")),
                            ins.family(str_arg(check, "L", "L")),
                            ins.family(str_arg(check, "Lin", "Lin")),
                            point_arg(ins, check, "x"),
                            check.contains("a") ? rational_from_json(check.at("a"))
                                                : ins.param("a"));
  if (rule == "bronsted-rockafellar") {
    const FamilyRef& L = ins.family(str_arg(check, "L", "L"));
    auto vi = L->find(
        ElementaryFunction::from_text(check.at("v").get<std::string>(), ins.domain));
    if (!vi) throw LoadError("bronsted check: v is not a member of L");
    BronstedResult r = bronsted_rockafellar_search(
        ins.function(str_arg(check, "f", "f")), L, ins.family(str_arg(check, "Lin", "Lin")),
        point_arg(ins, check, "y"), *vi,
        check.contains("lambda") ? rational_from_json(check.at("lambda"))
                                 : ins.param("lambda"),
        check.contains("mu") ? rational_from_json(check.at("mu")) : ins.param("mu"));
    return r.report;
  }
  if (rule == "zero-subgradient")
    return zero_subgradient_check(ins.function(str_arg(check, "f", "f")),
                                  ins.family(str_arg(check, "L", "L")),
                                  ins.family(str_arg(check, "Lin", "Lin")));
  if (rule == "point-hull") {
    Expectation e("point-set hull");
    PointSet hull =
        point_set_hull(ins.family(str_arg(check, "L", "L")),
                       ins.point_set(str_arg(check, "Y", "Y")));
    e.rep.witness("hull", hull.to_string());
    return e.rep;
  }
  throw LoadError("unknown check rule '" + rule + "'");
}

}  // namespace

Report run_instance_checks(const Instance& ins) {
  Report rep;
  rep.scenario = ins.name;
  for (const json& check : ins.checks) rep.add(run_one_check(ins, check));
  rep.finalize();
  return rep;
}

std::string emit_plot_data(const Instance& ins, const std::vector<std::string>& functions,
                           const Rational& lo, const Rational& hi, const Rational& step) {
  if (!ins.domain.is_real_line())
    throw std::invalid_argument("plot data needs the real_line backend");
  if (!step.is_positive()) throw std::invalid_argument("step must be positive");
  std::string out = "x";
  std::vector<const TargetFunction*> fs;
  for (const std::string& name : functions) {
    fs.push_back(&ins.function(name));
    out += "," + name;
  }
  out += "\n";
  for (Rational x = lo; x <= hi; x += step) {
    out += x.decimal_string();
    for (const TargetFunction* f : fs) {
      ExtReal v = f->value_at(point1(x));
      out += "," + (v.is_finite() ? v.finite_value().decimal_string() : v.to_string());
    }
    out += "\n";
  }
  return out;
}

}  // namespace absconv
