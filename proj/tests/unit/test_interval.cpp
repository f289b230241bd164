#include "doctest.h"

#include "absconv/interval.hpp"

using namespace absconv;

namespace {
Rational q(long long n, long long d = 1) { return Rational(n, d); }
}

TEST_CASE("interval invariants are enforced") {
  CHECK_THROWS_AS(Interval(ExtReal(q(2)), ExtReal(q(1)), false, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(Interval(ExtReal::neg_infinity(), ExtReal(q(0)), true, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(Interval(ExtReal(q(1)), ExtReal(q(1)), true, false),
                  std::invalid_argument);
  CHECK(Interval::point(q(1)).is_point());
}

TEST_CASE("interval membership respects closedness") {
  Interval half = Interval::segment(q(0), false, q(1), true);
  CHECK(!half.contains(q(0)));
  CHECK(half.contains(q(1)));
  CHECK(half.contains(q(1, 2)));
  CHECK(Interval::below(q(3), false).contains(q(-100)));
  CHECK(!Interval::below(q(3), false).contains(q(3)));
}

TEST_CASE("interval sets canonicalize: sorted, merged, disjoint") {
  IntervalSet s({Interval::open(q(2), q(3)), Interval::open(q(0), q(1)),
                 Interval::segment(q(1), true, q(2), true)});
  REQUIRE(s.parts().size() == 1);
  CHECK(s.parts()[0] == Interval::open(q(0), q(3)));

  // touching open endpoints do not merge
  IntervalSet t({Interval::open(q(0), q(1)), Interval::open(q(1), q(2))});
  CHECK(t.parts().size() == 2);
  CHECK(!t.contains(q(1)));

  // a point plugs the gap
  IntervalSet u({Interval::open(q(0), q(1)), Interval::point(q(1)),
                 Interval::open(q(1), q(2))});
  REQUIRE(u.parts().size() == 1);
  CHECK(u.parts()[0] == Interval::open(q(0), q(2)));

  // overlap swallows
  IntervalSet v({Interval::open(q(0), q(10)), Interval::closed(q(2), q(3))});
  REQUIRE(v.parts().size() == 1);
  CHECK(v.parts()[0] == Interval::open(q(0), q(10)));
}

TEST_CASE("interval set intersection") {
  IntervalSet a({Interval::below(q(-3), false), Interval::above(q(3), false)});
  IntervalSet b({Interval::open(q(-1, 2), q(1, 2))});
  CHECK(IntervalSet::intersect(a, b).empty());

  IntervalSet c({Interval::open(q(-3), q(-1, 2))});
  IntervalSet d({Interval::open(q(1, 2), q(3))});
  CHECK(IntervalSet::intersect(c, d).empty());

  IntervalSet e({Interval::closed(q(0), q(2))});
  IntervalSet f({Interval::segment(q(1), false, q(5), true)});
  auto g = IntervalSet::intersect(e, f);
  REQUIRE(g.parts().size() == 1);
  CHECK(g.parts()[0] == Interval::segment(q(1), false, q(2), true));

  // closed endpoints meeting produce a point
  IntervalSet h({Interval::closed(q(0), q(1))});
  IntervalSet i({Interval::closed(q(1), q(2))});
  auto j = IntervalSet::intersect(h, i);
  REQUIRE(j.parts().size() == 1);
  CHECK(j.parts()[0].is_point());
}

TEST_CASE("interval text forms") {
  CHECK(Interval::open(q(-1, 2), q(1, 2)).to_string() == "(-1/2, 1/2)");
  CHECK(Interval::below(q(-3), false).to_string() == "(-inf, -3)");
  CHECK(IntervalSet({Interval::below(q(-3), false), Interval::above(q(3), false)})
            .to_string() == "(-inf, -3) U (3, +inf)");
  CHECK(IntervalSet().to_string() == "empty");
}
