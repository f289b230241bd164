#include "doctest.h"

#include <random>

#include "absconv/monotone.hpp"

using namespace absconv;

namespace {
Rational q(long long n, long long d = 1) { return Rational(n, d); }
const DomainSpec kGrid = DomainSpec::grid1({q(-2), q(-1), q(0), q(1), q(2)});
FamilyRef kL() { return make_family_from_texts(kGrid, {"-x", "0", "x"}); }
}  // namespace

TEST_CASE("monotonicity: vacuous, worked, and violated") {
  FamilyRef L = kL();
  CHECK(is_monotone(OperatorGraph(L, {})).ok());

  TargetFunction f = TargetFunction::from_text("abs(x)", kGrid);
  OperatorGraph T = subdifferential_operator(f, L);
  CHECK(is_monotone(T).ok());

  // oracle: quadruple loop over the graph
  for (const auto& a : T.pairs())
    for (const auto& b : T.pairs()) {
      const auto& u = L->member(a.second).table();
      const auto& v = L->member(b.second).table();
      CHECK(u[static_cast<std::size_t>(a.first)] - u[static_cast<std::size_t>(b.first)] +
                v[static_cast<std::size_t>(b.first)] - v[static_cast<std::size_t>(a.first)] >=
            q(0));
    }

  int x0 = *kGrid.point_index(point1(q(0))), x1 = *kGrid.point_index(point1(q(1)));
  RuleReport bad = is_monotone(OperatorGraph(L, {{x0, 2}, {x1, 0}}));  // (0,x), (1,-x)
  CHECK(bad.conclusion == ConclusionStatus::violated);
  REQUIRE(bad.witnesses.size() == 4);
}

TEST_CASE("subdifferential operator of |x| has the expected images") {
  FamilyRef L = kL();
  TargetFunction f = TargetFunction::from_text("abs(x)", kGrid);
  OperatorGraph T = subdifferential_operator(f, L);
  int p0 = *kGrid.point_index(point1(q(0)));
  CHECK(T.image_of(p0) == std::vector<int>{0, 1, 2});
  CHECK(T.image_of(*kGrid.point_index(point1(q(-1)))) == std::vector<int>{0});
  CHECK(T.image_of(*kGrid.point_index(point1(q(1)))) == std::vector<int>{2});
}

TEST_CASE("maximality within a candidate grid") {
  FamilyRef L = kL();
  TargetFunction f = TargetFunction::from_text("abs(x)", kGrid);
  OperatorGraph T = subdifferential_operator(f, L);
  CHECK(is_maximal_within(T, CandidateSet::full_grid(T)).ok());
  CHECK(is_maximal_within(T, CandidateSet{T.pairs(), "itself"}).ok());

  OperatorGraph small(L, {{0, 0}});
  RuleReport r = is_maximal_within(small, CandidateSet::full_grid(small));
  CHECK(r.conclusion == ConclusionStatus::violated);
  CHECK_THROWS_AS(is_maximal_within(T, CandidateSet{{}, "empty"}), std::invalid_argument);
}

TEST_CASE("inverse operators: involution, monotonicity preserved") {
  FamilyRef L = kL();
  CHECK(inverse_operator(OperatorGraph(L, {})).pairs().empty());
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 6; ++i)
      pairs.emplace_back(static_cast<int>(rng() % 5), static_cast<int>(rng() % 3));
    OperatorGraph T(L, pairs);
    CHECK(inverse_operator(inverse_operator(T)) == T);
    if (is_monotone(T).ok()) CHECK(is_monotone(inverse_operator(T)).ok());
  }
}

TEST_CASE("combinations with nonnegative coefficients") {
  FamilyRef L = kL();
  TargetFunction f1 = TargetFunction::from_text("abs(x)", kGrid);
  TargetFunction f2 = TargetFunction::from_text("max(0,x)", kGrid);
  OperatorGraph T1 = subdifferential_operator(f1, L);
  OperatorGraph T2 = subdifferential_operator(f2, L);

  OperatorGraph zero = combine_operators(q(0), T1, q(0), T2);
  CHECK(is_monotone(zero).ok());
  CHECK(zero.family()->size() == 1);
  CHECK(zero.family()->member(0).same_function(zero_member(kGrid)));

  OperatorGraph left = combine_operators(q(1), T1, q(0), T2);
  CHECK(is_monotone(left).ok());
  for (const auto& [p, m] : left.pairs()) {
    bool matched = false;
    for (int orig : T1.image_of(p))
      if (left.family()->member(m).same_function(L->member(orig))) matched = true;
    CHECK(matched);
  }

  CHECK(is_monotone(combine_operators(q(1), T1, q(1), T2)).ok());
  CHECK(is_monotone(combine_operators(q(2), T1, q(3, 2), T2)).ok());
  CHECK_THROWS_AS(combine_operators(q(-1), T1, q(1), T2), std::invalid_argument);
}

TEST_CASE("assumption check: bounded plus support-sum") {
  FamilyRef L = kL();
  FamilyRef Lin = make_family_from_texts(kGrid, {"0", "x", "-x", "1*abs(x - 0)"});
  TargetFunction f = TargetFunction::from_text("abs(x)", kGrid);
  RuleReport good = assumption_check(f, L, Lin, point1(q(0)), q(1));
  CHECK(good.hypothesis == HypothesisStatus::holds);

  // the line backend decides boundedness from the tails
  DomainSpec line = DomainSpec::real_line();
  FamilyRef Ll = make_family_from_texts(line, {"-x", "0", "x"});
  FamilyRef Linl = make_family_from_texts(line, {"0", "x", "-x", "1/2*abs(x - 0)"});
  TargetFunction slope = TargetFunction::from_text("x", line);
  RuleReport thin = assumption_check(slope, Ll, Linl, point1(q(0)), q(1, 2));
  CHECK(thin.hypothesis == HypothesisStatus::fails);  // x + |x|/2 dives left

  FamilyRef Linw = make_family_from_texts(line, {"0", "x", "-x", "2*abs(x - 0)"});
  RuleReport wide = assumption_check(slope, Ll, Linw, point1(q(0)), q(2));
  // bounded below now; the hypothesis may still hinge on the support sum
  bool bounded_note = false;
  for (const auto& n : wide.notes)
    if (n.rfind("infimum", 0) == 0) bounded_note = true;
  CHECK(bounded_note);

  CHECK_THROWS_AS(assumption_check(f, L, make_family_from_texts(kGrid, {"0"}), point1(q(0)),
                                   q(1)),
                  std::invalid_argument);  // cone missing from Lin
}

TEST_CASE("the subgradient trade search") {
  FamilyRef L = kL();
  FamilyRef Lin1 = make_family_from_texts(kGrid, {"0", "x", "-x", "1*abs(x - 1)"});
  TargetFunction f = TargetFunction::from_text("abs(x)", kGrid);
  int v0 = *L->find(zero_member(kGrid));

  BronstedResult zero_slack =
      bronsted_rockafellar_search(f, L, Lin1, point1(q(0)), v0, q(1), q(1));
  REQUIRE(zero_slack.witness.has_value());
  CHECK(zero_slack.witness->z == point1(q(0)));
  CHECK(zero_slack.witness->slope == q(0));

  BronstedResult traded =
      bronsted_rockafellar_search(f, L, Lin1, point1(q(1)), v0, q(1), q(1));
  REQUIRE(traded.witness.has_value());
  CHECK((traded.witness->z[0] - q(1)).abs() <= q(1));
  CHECK(traded.witness->slope.abs() <= q(1));
  // the witness is a genuine subgradient within the summed family
  SubdifferentialSet sd = subdifferential(f, traded.sum.family, traded.witness->z);
  CHECK(sd.contains(traded.witness->w_index));

  CHECK_THROWS_AS(bronsted_rockafellar_search(f, L, Lin1, point1(q(2)), v0, q(1, 4), q(1, 4)),
                  std::invalid_argument);
}

TEST_CASE("zero-subgradient criterion") {
  FamilyRef L = kL();
  FamilyRef Lin = make_family_from_texts(kGrid, {"0", "x", "-x", "1*abs(x - 0)"});
  RuleReport good =
      zero_subgradient_check(TargetFunction::from_text("abs(x)", kGrid), L, Lin);
  CHECK(good.hypothesis == HypothesisStatus::holds);
  CHECK(good.conclusion == ConclusionStatus::equal);

  RuleReport na = zero_subgradient_check(TargetFunction::from_text("x", kGrid),
                                         make_family_from_texts(kGrid, {"x"}),
                                         make_family_from_texts(kGrid, {"0"}));
  CHECK(na.hypothesis == HypothesisStatus::fails);
  CHECK(na.ok());

  FamilyRef Labs = make_family_from_texts(kGrid, {"abs(x)", "0"});
  RuleReport member = zero_subgradient_check(TargetFunction::from_text("abs(x)", kGrid),
                                             Labs, make_family_from_texts(kGrid, {"0"}));
  CHECK(member.hypothesis == HypothesisStatus::holds);
  CHECK(member.conclusion == ConclusionStatus::equal);

  CHECK_THROWS_AS(
      zero_subgradient_check(TargetFunction::from_text("x", DomainSpec::grid1({q(1), q(2)})),
                             make_family_from_texts(DomainSpec::grid1({q(1), q(2)}), {"x"}),
                             make_family_from_texts(DomainSpec::grid1({q(1), q(2)}), {"0"})),
      std::invalid_argument);  // no origin in the grid
}
