#include "doctest.h"

#include <random>

#include "absconv/hulls.hpp"

using namespace absconv;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

FamilyRef fig1_family() {
  return make_family_from_texts(DomainSpec::real_line(),
                                {"-abs(x-1)+2", "-abs(x+1)+2", "-abs(x)+2", "0"});
}

// brute-force oracle: filter by evaluating on a grid of points
std::vector<int> oracle_support(const FamilyRef& H, const TargetFunction& f) {
  std::vector<int> out;
  for (std::size_t i = 0; i < H->size(); ++i) {
    bool in = true;
    for (const Point& p : H->domain().points)
      if (ExtReal(H->member(static_cast<int>(i)).eval(H->domain(), p)) > f.value_at(p))
        in = false;
    if (in) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

TEST_CASE("support sets of the two-cone envelopes") {
  FamilyRef H = fig1_family();
  TargetFunction fA = TargetFunction::envelope(H, {0, 1});
  TargetFunction fB = TargetFunction::envelope(H, {2, 3});
  CHECK(support_set(H, fA).indices == std::vector<int>{0, 1});
  CHECK(support_set(H, fB).indices == std::vector<int>{2, 3});
  CHECK(is_abstract_convex(H, fA));
  CHECK(is_abstract_convex(H, fB));

  TargetFunction self = TargetFunction::from_member(H, 2);
  CHECK(support_set(make_family_from_texts(DomainSpec::real_line(), {"-abs(x)+2"}), self)
            .indices == std::vector<int>{0});
}

TEST_CASE("support set equals the brute-force filter on random grids") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Rational> xs;
    for (int i = -10; i <= 10; ++i) xs.push_back(q(i));
    DomainSpec dom = DomainSpec::grid1(xs);  // 21-point grid
    FamilyRef H = make_family_from_texts(
        dom, {"x", "-x", "abs(x)", "max(0,x)", "min(x,2)", "0", "2*x - 3"});
    std::vector<ExtReal> vals;
    for (std::size_t i = 0; i < dom.points.size(); ++i)
      vals.push_back(ExtReal(q(static_cast<long long>(rng() % 17) - 8)));
    TargetFunction f = TargetFunction::from_table(dom, vals, "random");
    CHECK(support_set(H, f).indices == oracle_support(H, f));
  }
}

TEST_CASE("hull of a function: below, convex, idempotent; empty support is -inf") {
  FamilyRef H = fig1_family();
  TargetFunction fA = TargetFunction::envelope(H, {0, 1});
  CHECK(co_function(H, fA).same_as(fA));

  // a function below every member hulls to the family envelope
  TargetFunction low = TargetFunction::from_text("-abs(x) - 10", DomainSpec::real_line());
  std::vector<int> all{0, 1, 2, 3};
  CHECK(co_function(H, low).same_as(TargetFunction::neg_infinity(DomainSpec::real_line())));
  TargetFunction high = TargetFunction::from_text("abs(x) + 10", DomainSpec::real_line());
  CHECK(co_function(H, high).same_as(TargetFunction::envelope(H, all)));

  TargetFunction hull = co_function(H, TargetFunction::from_text("abs(x)", DomainSpec::real_line()));
  CHECK(is_abstract_convex(H, hull));
  CHECK(co_function(H, hull).same_as(hull));
  CHECK(!is_abstract_convex(make_family_from_texts(DomainSpec::real_line(), {"x"}),
                            TargetFunction::from_text("abs(x)", DomainSpec::real_line())));
}

TEST_CASE("hull of a set: extensive, monotone, idempotent; worked example") {
  FamilyRef H = fig1_family();
  SupportSet A = make_subset(H, {0, 1});
  CHECK(co_set(H, A).indices == A.indices);
  CHECK(co_set(H, make_subset(H, {0, 1, 2, 3})).indices == std::vector<int>{0, 1, 2, 3});
  CHECK(co_set(H, make_subset(H, {})).indices.empty());
}

TEST_CASE("point-set hulls") {
  DomainSpec grid = DomainSpec::grid1({q(-2), q(-1), q(0), q(1), q(2)});
  FamilyRef L = make_family_from_texts(grid, {"x", "-x"});
  PointSet Y = PointSet::finite(grid, {1, 3});  // {-1, 1}
  PointSet hull = point_set_hull(L, Y);
  CHECK(hull.indices() == std::vector<int>{1, 2, 3});  // {-1, 0, 1}
  CHECK(point_set_hull(L, hull) == hull);
  CHECK(point_set_hull(L, PointSet::all(grid)) == PointSet::all(grid));
  CHECK(point_set_hull(L, PointSet::none(grid)).is_empty());

  // sublevel set of an L-convex function is hull-closed
  FamilyRef L0 = make_family_from_texts(grid, {"x", "-x", "0"});
  TargetFunction f = TargetFunction::envelope(L0, {0, 1});  // |x|
  PointSet sub = sublevel_set(f, q(1));
  CHECK(point_set_hull(L0, sub) == sub);
}

TEST_CASE("point-from-set separation witnesses") {
  FamilyRef H = fig1_family();
  SupportSet A = make_subset(H, {0, 1});
  CHECK(separate_point_from_set(H, A, H->member(2)) == point1(q(0)));
  CHECK(separate_point_from_set(H, A, H->member(3))[0] == q(-4));  // (-inf,-3): hi - 1

  CHECK_THROWS_AS(separate_point_from_set(H, A, H->member(0)), NotSeparable);

  // a set that is not hull-closed is rejected up front
  FamilyRef V = make_family_from_texts(DomainSpec::real_line(), {"x", "-x", "abs(x)"});
  CHECK_THROWS_AS(separate_point_from_set(V, make_subset(V, {0, 1}), V->member(2)),
                  std::invalid_argument);
}

TEST_CASE("two-set separation reproduces the counterexample, and a positive case") {
  FamilyRef H = fig1_family();
  SupportSet A = make_subset(H, {0, 1}), B = make_subset(H, {2, 3});
  SetSeparation s1 = separate_sets(H, A, B);
  CHECK(!s1.witness.has_value());
  REQUIRE(s1.regions.size() == 2);
  CHECK(s1.regions[0].second.intervals() == IntervalSet({Interval::open(q(-1, 2), q(1, 2))}));
  CHECK(s1.regions[1].second.intervals() ==
        IntervalSet({Interval::below(q(-3), false), Interval::above(q(3), false)}));
  SetSeparation s2 = separate_sets(H, B, A);
  CHECK(!s2.witness.has_value());

  // one function strictly above the other everywhere separates trivially
  FamilyRef H2 = make_family_from_texts(DomainSpec::real_line(), {"x", "x + 1"});
  SetSeparation s3 = separate_sets(H2, make_subset(H2, {0}), make_subset(H2, {1}));
  REQUIRE(s3.witness.has_value());
  CHECK((*s3.witness)[0] == q(0));  // canonical representative of the whole line
}

TEST_CASE("hull laws on random subsets") {
  FamilyRef H = fig1_family();
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<int> c, d;
    for (int i = 0; i < 4; ++i) {
      if (rng() % 2) c.push_back(i);
      if (rng() % 2) d.push_back(i);
    }
    for (int i : c)
      if (std::find(d.begin(), d.end(), i) == d.end()) d.push_back(i);
    SupportSet C = make_subset(H, c), D = make_subset(H, d);
    SupportSet coC = co_set(H, C), coD = co_set(H, D);
    CHECK(std::includes(coC.indices.begin(), coC.indices.end(), C.indices.begin(),
                        C.indices.end()));
    CHECK(std::includes(coD.indices.begin(), coD.indices.end(), coC.indices.begin(),
                        coC.indices.end()));
    CHECK(co_set(H, coC).indices == coC.indices);
    std::vector<int> inter;
    std::set_intersection(coC.indices.begin(), coC.indices.end(), coD.indices.begin(),
                          coD.indices.end(), std::back_inserter(inter));
    CHECK(co_set(H, make_subset(H, inter)).indices == inter);
  }
}
