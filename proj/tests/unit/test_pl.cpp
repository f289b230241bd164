#include "doctest.h"

#include <random>

#include "absconv/pl.hpp"

using namespace absconv;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

PLFunction identity_line() { return PLFunction::linear(q(1), q(0)); }
PLFunction abs_line() { return pl_upper_envelope({identity_line(), PLFunction::linear(q(-1), q(0))}); }

// -|x - c| + h
PLFunction down_cone(const Rational& c, const Rational& h) {
  PLFunction absshift =
      pl_upper_envelope({PLFunction::linear(q(1), -c), PLFunction::linear(q(-1), c)});
  return pl_combine({{q(-1), absshift}}, h);
}

PLFunction fig1_fA() { return pl_upper_envelope({down_cone(q(1), q(2)), down_cone(q(-1), q(2))}); }
PLFunction fig1_fB() { return pl_upper_envelope({down_cone(q(0), q(2)), PLFunction::constant(q(0))}); }

std::vector<Rational> random_rationals(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long long> num(-640, 640);
  std::uniform_int_distribution<long long> den(1, 64);
  std::vector<Rational> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Rational x(num(rng), den(rng));  // lands in [-10, 10]
    out.push_back(x);
  }
  return out;
}

PLFunction random_pl(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nbp(0, 8);
  std::uniform_int_distribution<long long> num(-64, 64);
  std::uniform_int_distribution<long long> den(1, 8);
  int n = nbp(rng);
  std::vector<Rational> bps;
  for (int i = 0; i < n; ++i) bps.push_back(Rational(num(rng), den(rng)));
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  n = static_cast<int>(bps.size());
  std::vector<Rational> slopes;
  for (int i = 0; i <= n; ++i) slopes.push_back(Rational(num(rng), den(rng)));
  if (n == 0) {
    PLFunction f = PLFunction::linear(slopes[0], Rational(num(rng), den(rng)));
    return f;
  }
  std::vector<Rational> vals;
  vals.push_back(Rational(num(rng), den(rng)));
  for (int i = 1; i < n; ++i)
    vals.push_back(vals.back() + slopes[static_cast<std::size_t>(i)] * (bps[i] - bps[i - 1]));
  return PLFunction(bps, vals, slopes);
}

}  // namespace

TEST_CASE("point evaluation matches the named functions") {
  CHECK(pl_eval(down_cone(q(1), q(2)), q(0)) == q(1));
  CHECK(pl_eval(fig1_fA(), q(0)) == q(1));
  CHECK(pl_eval(PLFunction::constant(q(0)), q(7)) == q(0));
  CHECK(pl_eval(fig1_fA(), q(-1)) == q(2));
  CHECK(pl_eval(fig1_fA(), q(1)) == q(2));
  CHECK(pl_eval(fig1_fB(), q(0)) == q(2));
  CHECK(pl_eval(fig1_fB(), q(3)) == q(0));
}

TEST_CASE("combine cancels, shifts and canonicalizes") {
  PLFunction zero = pl_combine({{q(1), identity_line()}, {q(1), PLFunction::linear(q(-1), q(0))}}, q(0));
  CHECK(zero == PLFunction::constant(q(0)));

  PLFunction relu = pl_upper_envelope({PLFunction::constant(q(0)), identity_line()});
  PLFunction u = pl_combine({{q(1), relu}}, q(-1));  // max(0,x) - 1
  REQUIRE(u.breakpoints().size() == 1);
  CHECK(u.breakpoints()[0] == q(0));
  CHECK(u.values()[0] == q(-1));
  CHECK(u.slopes() == std::vector<Rational>{q(0), q(1)});

  PLFunction w = pl_combine({{q(1), abs_line()}, {q(-1), identity_line()}}, q(0));
  REQUIRE(w.breakpoints() == std::vector<Rational>{q(0)});
  CHECK(w.slopes() == std::vector<Rational>{q(-2), q(0)});
  // oracle: pointwise sums on a small grid
  for (long long g = -2; g <= 2; ++g)
    CHECK(w.value_at(q(g)) == abs_line().value_at(q(g)) - q(g));
}

TEST_CASE("upper envelope reproduces the two-cone peak pattern") {
  PLFunction fA = fig1_fA();
  CHECK(fA.breakpoints() == std::vector<Rational>{q(-1), q(0), q(1)});
  CHECK(fA.values() == std::vector<Rational>{q(2), q(1), q(2)});
  CHECK(fA.slopes() == std::vector<Rational>{q(1), q(-1), q(1), q(-1)});

  CHECK(pl_upper_envelope({identity_line(), PLFunction::linear(q(-1), q(0))}) == abs_line());
  std::mt19937_64 rng(3);
  PLFunction g = random_pl(rng);
  CHECK(pl_upper_envelope({g}) == g);
  CHECK_THROWS_AS(pl_upper_envelope({}), EmptyEnvelope);
}

TEST_CASE("dominance decisions") {
  CHECK(pl_dominates(abs_line(), identity_line()));
  CHECK(!pl_dominates(identity_line(), abs_line()));
  CHECK(!pl_dominates(fig1_fA(), down_cone(q(0), q(2))));
  CHECK(pl_dominates(fig1_fA(), fig1_fA()));
}

TEST_CASE("strict-above regions match the worked counterexample") {
  PLFunction fA = fig1_fA(), fB = fig1_fB();
  CHECK(pl_strict_above_region(down_cone(q(0), q(2)), fA) ==
        IntervalSet({Interval::open(q(-1, 2), q(1, 2))}));
  CHECK(pl_strict_above_region(PLFunction::constant(q(0)), fA) ==
        IntervalSet({Interval::below(q(-3), false), Interval::above(q(3), false)}));
  CHECK(pl_strict_above_region(down_cone(q(1), q(2)), fB) ==
        IntervalSet({Interval::open(q(1, 2), q(3))}));
  CHECK(pl_strict_above_region(down_cone(q(-1), q(2)), fB) ==
        IntervalSet({Interval::open(q(-3), q(-1, 2))}));
  CHECK(pl_strict_above_region(fA, fA).empty());
}

TEST_CASE("supremum with witnesses") {
  PLFunction f = pl_combine({{q(1), identity_line()}, {q(-1), abs_line()}}, q(0));
  PLSupremum s = pl_supremum(f);
  CHECK(s.value == ExtReal(q(0)));
  CHECK(s.attained_at == q(0));

  CHECK(pl_supremum(identity_line()).value.is_pos_inf());
  CHECK(!pl_supremum(identity_line()).attained_at.has_value());

  PLFunction d = pl_combine({{q(1), down_cone(q(0), q(2))}, {q(-1), fig1_fA()}}, q(0));
  PLSupremum sd = pl_supremum(d);
  CHECK(sd.value == ExtReal(q(1)));
  CHECK(sd.attained_at == q(0));

  CHECK(pl_infimum(abs_line()).value == ExtReal(q(0)));
  CHECK(pl_supremum(PLFunction::constant(q(5))).value == ExtReal(q(5)));
}

TEST_CASE("canonical-form soundness against naive evaluation") {
  std::mt19937_64 rng(20250808);
  for (int iter = 0; iter < 40; ++iter) {
    PLFunction f = random_pl(rng), g = random_pl(rng), h = random_pl(rng);
    std::uniform_int_distribution<long long> cn(-8, 8);
    Rational cf(cn(rng)), cg(cn(rng)), off(cn(rng));
    PLFunction comb = pl_combine({{cf, f}, {cg, g}}, off);
    PLFunction env = pl_upper_envelope({f, g, h});
    for (const Rational& x : random_rationals(rng, 25)) {
      CHECK(comb.value_at(x) == cf * f.value_at(x) + cg * g.value_at(x) + off);
      Rational m = f.value_at(x);
      if (g.value_at(x) > m) m = g.value_at(x);
      if (h.value_at(x) > m) m = h.value_at(x);
      CHECK(env.value_at(x) == m);
    }
  }
}

TEST_CASE("dominance iff empty strict region; envelope laws; sup bounds") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    PLFunction f = random_pl(rng), g = random_pl(rng);
    CHECK(pl_dominates(f, g) == pl_strict_above_region(g, f).empty());

    PLFunction env = pl_upper_envelope({f, g});
    CHECK(env == pl_upper_envelope({g, f}));
    CHECK(env == pl_upper_envelope({env, f}));
    CHECK(pl_dominates(env, f));
    CHECK(pl_dominates(env, g));

    PLSupremum s = pl_supremum(f);
    for (const Rational& x : random_rationals(rng, 10)) {
      CHECK(s.value >= ExtReal(f.value_at(x)));
    }
    if (s.attained_at) CHECK(ExtReal(f.value_at(*s.attained_at)) == s.value);
  }
}

TEST_CASE("strict regions agree with dense sampling") {
  std::mt19937_64 rng(314159);
  for (int iter = 0; iter < 40; ++iter) {
    PLFunction f = random_pl(rng), g = random_pl(rng);
    IntervalSet region = pl_strict_above_region(f, g);
    for (const Rational& x : random_rationals(rng, 40))
      CHECK(region.contains(x) == (f.value_at(x) > g.value_at(x)));
    // crossing roots themselves are excluded
    for (const Interval& part : region.parts()) {
      if (part.lo.is_finite() && !part.lo_closed) {
        const Rational& r = part.lo.finite_value();
        CHECK(f.value_at(r) <= g.value_at(r));
      }
    }
  }
}

TEST_CASE("interval-set intersection agrees with pointwise membership") {
  std::mt19937_64 rng(2718);
  for (int iter = 0; iter < 30; ++iter) {
    PLFunction f = random_pl(rng), g = random_pl(rng), h = random_pl(rng);
    IntervalSet a = pl_strict_above_region(f, g);
    IntervalSet b = pl_strict_above_region(g, h);
    IntervalSet both = IntervalSet::intersect(a, b);
    for (const Rational& x : random_rationals(rng, 30))
      CHECK(both.contains(x) == (a.contains(x) && b.contains(x)));
  }
}

TEST_CASE("translation shifts breakpoints exactly") {
  PLFunction f = fig1_fA();
  PLFunction g = pl_translate(f, q(2));  // g(x) = f(x+2)
  CHECK(g.value_at(q(-2)) == f.value_at(q(0)));
  CHECK(g.breakpoints() == std::vector<Rational>{q(-3), q(-2), q(-1)});
  CHECK(pl_translate(g, q(-2)) == f);
}

TEST_CASE("supremum over interval sets") {
  PLFunction fA = fig1_fA();
  IntervalSet window({Interval::closed(q(-1, 2), q(1, 2))});
  PLSupremum s = pl_supremum_over(fA, window);
  CHECK(s.value == ExtReal(q(3, 2)));  // attained at the window edges

  IntervalSet tail({Interval::below(q(0), false)});
  CHECK(pl_supremum_over(identity_line(), tail).value == ExtReal(q(0)));
  CHECK(pl_supremum_over(PLFunction::linear(q(-1), q(0)), tail).value.is_pos_inf());
  CHECK(pl_supremum_over(fA, IntervalSet::all_reals()).value == ExtReal(q(2)));
  CHECK(pl_supremum_over(fA, IntervalSet()).value.is_neg_inf());
}
