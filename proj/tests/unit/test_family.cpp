#include "doctest.h"

#include "absconv/family.hpp"

using namespace absconv;

namespace {
Rational q(long long n, long long d = 1) { return Rational(n, d); }
const DomainSpec kGrid = DomainSpec::grid1({q(-2), q(-1), q(0), q(1), q(2)});
}  // namespace

TEST_CASE("families deduplicate pointwise-equal members, keeping first texts") {
  FamilyRef fam = make_family_from_texts(kGrid, {"x", "2*x - x", "0", "x - x"});
  REQUIRE(fam->size() == 2);
  CHECK(fam->member(0).text() == "x");
  CHECK(fam->member(1).text() == "0");
  CHECK(fam->find(ElementaryFunction::from_text("1*x", kGrid)) == 0);
  CHECK(!fam->find(ElementaryFunction::from_text("x + 1", kGrid)).has_value());
}

TEST_CASE("pinning vanishes at the pin point and is idempotent") {
  FamilyRef L = make_family_from_texts(kGrid, {"x", "max(0,x)", "abs(x)"});
  Point at = point1(q(1));
  FamilyRef Lx = family_pin(L, at);
  for (const auto& m : Lx->members()) CHECK(m.eval(kGrid, at) == q(0));
  FamilyRef Lxx = family_pin(Lx, at);
  REQUIRE(Lxx->size() == Lx->size());
  for (std::size_t i = 0; i < Lx->size(); ++i)
    CHECK(Lxx->member(static_cast<int>(i)).same_function(Lx->member(static_cast<int>(i))));

  // l - l(x) with l(x) = 0 stays l, including its text
  FamilyRef single = make_family_from_texts(kGrid, {"x"});
  FamilyRef pinned = family_pin(single, point1(q(0)));
  CHECK(pinned->member(0).text() == "x");

  // max(0,.) pinned at 1 is the worked subgradient example
  FamilyRef relu = make_family_from_texts(kGrid, {"max(0,x)"});
  FamilyRef relu1 = family_pin(relu, point1(q(1)));
  CHECK(relu1->member(0).same_function(ElementaryFunction::from_text("max(0,x) - 1", kGrid)));

  CHECK_THROWS_AS(family_pin(L, point1(q(7))), std::invalid_argument);
}

TEST_CASE("family sums deduplicate and record every decomposition") {
  FamilyRef A = make_family_from_texts(kGrid, {"x", "-x"});
  FamilySum sum = family_sum(A, A);
  REQUIRE(sum.family->size() == 3);  // {2x, 0, -2x} is the oracle enumeration
  auto zero = sum.family->find(ElementaryFunction::from_text("0", kGrid));
  REQUIRE(zero.has_value());
  CHECK(sum.splits[static_cast<std::size_t>(*zero)].size() == 2);
  auto twox = sum.family->find(ElementaryFunction::from_text("2*x", kGrid));
  REQUIRE(twox.has_value());
  CHECK(sum.splits[static_cast<std::size_t>(*twox)].size() == 1);

  FamilyRef B = make_family_from_texts(kGrid, {"x", "0"});
  FamilyRef Z = make_family_from_texts(kGrid, {"0"});
  FamilySum bz = family_sum(B, Z);
  CHECK(bz.family->size() == 2);  // {x, 0}

  // commutative up to member order
  FamilySum ab = family_sum(A, B), ba = family_sum(B, A);
  CHECK(ab.family->size() == ba.family->size());
  for (const auto& m : ab.family->members()) CHECK(ba.family->find(m).has_value());
}

TEST_CASE("composition tabulates pointwise") {
  FamilyRef L = make_family_from_texts(kGrid, {"x", "abs(x)"});
  // u(y) = -y as a point map on the symmetric grid
  std::vector<int> flip = {4, 3, 2, 1, 0};
  FamilyRef comp = family_compose(L, flip, kGrid);
  CHECK(comp->member(0).same_function(ElementaryFunction::from_text("-x", kGrid)));
  CHECK(comp->member(1).same_function(ElementaryFunction::from_text("abs(x)", kGrid)));

  std::vector<int> ident = {0, 1, 2, 3, 4};
  FamilyRef same = family_compose(L, ident, kGrid);
  for (std::size_t i = 0; i < L->size(); ++i)
    CHECK(same->member(static_cast<int>(i)).same_function(L->member(static_cast<int>(i))));

  CHECK_THROWS_AS(family_compose(L, std::vector<int>{0, 1, 2, 3, 9}, kGrid),
                  std::invalid_argument);
}

TEST_CASE("vertical elements") {
  DomainSpec line = DomainSpec::real_line();
  ElementaryFunction l = ElementaryFunction::from_text("x", line);
  CHECK(vertical_element(line, l, q(0)).same_function(l));
  CHECK(vertical_element(line, l, q(1, 2))
            .same_function(ElementaryFunction::from_text("x - 1/2", line)));
  ElementaryFunction cone = ElementaryFunction::from_text("-abs(x)+2", line);
  CHECK(vertical_element(line, cone, q(2))
            .same_function(ElementaryFunction::from_text("-abs(x)", line)));
}

TEST_CASE("print, parse, lower round trip on the grid") {
  for (const char* text : {"max(0,x) - 1", "-abs(x-1)+2", "3/2*x - 1/3", "min(x, -x)"}) {
    ElementaryFunction f = ElementaryFunction::from_text(text, kGrid);
    ElementaryFunction g = ElementaryFunction::from_text(f.text(), kGrid);
    CHECK(f.same_function(g));
  }
}

TEST_CASE("family domain rules") {
  CHECK_THROWS_AS(make_family_from_texts(kGrid, {"x1 - x2"}), std::invalid_argument);
  CHECK_THROWS_AS(
      family_sum(make_family_from_texts(kGrid, {"x"}),
                 make_family_from_texts(DomainSpec::grid1({q(0)}), {"x"})),
      std::invalid_argument);
}
