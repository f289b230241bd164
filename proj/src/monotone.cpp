#include "absconv/monotone.hpp"

#include <algorithm>
#include <stdexcept>

namespace absconv {

namespace {

// Builds the cone a|. - x| as a family member.
ElementaryFunction cone_member(const DomainSpec& dom, const Rational& a, const Point& x) {
  if (dom.dimension != 1)
    throw std::invalid_argument("norm cones are supported on one-dimensional domains");
  FunctionExpr e = FunctionExpr::scale(
      a, FunctionExpr::abs_value(
             FunctionExpr::subtract(FunctionExpr::variable(0), FunctionExpr::literal(x[0]))));
  return ElementaryFunction::from_expr(e, dom);
}

// Exact linear fit d(t) = p*t over a one-dimensional backend; nullopt when
// the function is not linear through the origin.
std::optional<Rational> linear_slope_1d(const DomainSpec& dom, const ElementaryFunction& d) {
  if (dom.is_real_line()) {
    if (!d.pl().is_linear()) return std::nullopt;
    if (d.pl().value_at(Rational(0)) != Rational(0)) return std::nullopt;
    return d.pl().slopes()[0];
  }
  std::optional<Rational> p;
  for (std::size_t i = 0; i < dom.points.size(); ++i) {
    const Rational& t = dom.points[i][0];
    const Rational& v = d.table()[i];
    if (t.is_zero()) {
      if (!v.is_zero()) return std::nullopt;
      continue;
    }
    Rational cand = v / t;
    if (!p)
      p = cand;
    else if (*p != cand)
      return std::nullopt;
  }
  if (!p) p = Rational(0);  // single point at the origin
  return p;
}

}  // namespace

OperatorGraph::OperatorGraph(FamilyRef family, std::vector<std::pair<int, int>> pairs,
                             bool transposed)
    : family_(std::move(family)), pairs_(std::move(pairs)), transposed_(transposed) {
  if (!family_->domain().is_finite())
    throw std::invalid_argument("operator graphs are finite relations");
  for (const auto& [p, m] : pairs_) {
    if (p < 0 || static_cast<std::size_t>(p) >= family_->domain().points.size())
      throw std::out_of_range("graph point index outside the domain");
    if (m < 0 || static_cast<std::size_t>(m) >= family_->size())
      throw std::out_of_range("graph member index outside the family");
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

std::vector<int> OperatorGraph::image_of(int point_index) const {
  std::vector<int> out;
  for (const auto& [p, m] : pairs_)
    if (p == point_index) out.push_back(m);
  return out;
}

bool OperatorGraph::has_pair(int point_index, int member_index) const {
  return std::binary_search(pairs_.begin(), pairs_.end(),
                            std::make_pair(point_index, member_index));
}

CandidateSet CandidateSet::full_grid(const OperatorGraph& T) {
  CandidateSet s;
  s.name = "full grid X x L";
  for (std::size_t p = 0; p < T.domain().points.size(); ++p)
    for (std::size_t m = 0; m < T.family()->size(); ++m)
      s.pairs.emplace_back(static_cast<int>(p), static_cast<int>(m));
  return s;
}

namespace {

// u(x) - u(y) + v(y) - v(x) for pairs (x,u), (y,v); symmetric under the
// transposed reading.
Rational monotone_gap(const OperatorGraph& T, const std::pair<int, int>& a,
                      const std::pair<int, int>& b) {
  const auto& u = T.family()->member(a.second).table();
  const auto& v = T.family()->member(b.second).table();
  std::size_t x = static_cast<std::size_t>(a.first);
  std::size_t y = static_cast<std::size_t>(b.first);
  return u[x] - u[y] + v[y] - v[x];
}

}  // namespace

RuleReport is_monotone(const OperatorGraph& T) {
  RuleReport rep;
  rep.rule = "abstract-monotonicity";
  for (std::size_t i = 0; i < T.pairs().size(); ++i) {
    for (std::size_t j = i + 1; j < T.pairs().size(); ++j) {
      if (monotone_gap(T, T.pairs()[i], T.pairs()[j]) < Rational(0)) {
        rep.conclusion = ConclusionStatus::violated;
        const auto& [xi, ui] = T.pairs()[i];
        const auto& [yj, vj] = T.pairs()[j];
        rep.witness("x", point_to_string(T.domain().points[static_cast<std::size_t>(xi)]));
        rep.witness("u", T.family()->member(ui).text());
        rep.witness("y", point_to_string(T.domain().points[static_cast<std::size_t>(yj)]));
        rep.witness("v", T.family()->member(vj).text());
        return rep;
      }
    }
  }
  return rep;
}

RuleReport is_maximal_within(const OperatorGraph& T, const CandidateSet& S) {
  RuleReport rep;
  rep.rule = "maximality within " + S.name;
  for (const auto& [p, m] : S.pairs)
    if (p < 0 || static_cast<std::size_t>(p) >= T.domain().points.size() || m < 0 ||
        static_cast<std::size_t>(m) >= T.family()->size())
      throw std::out_of_range("candidate outside the grid");
  for (const auto& pair : T.pairs())
    if (std::find(S.pairs.begin(), S.pairs.end(), pair) == S.pairs.end())
      throw std::invalid_argument("candidate set must contain the graph");

  for (const auto& cand : S.pairs) {
    if (T.has_pair(cand.first, cand.second)) continue;
    bool consistent = true;
    for (const auto& pair : T.pairs()) {
      if (monotone_gap(T, pair, cand) < Rational(0)) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("extendable-point",
                  point_to_string(T.domain().points[static_cast<std::size_t>(cand.first)]));
      rep.witness("extendable-member", T.family()->member(cand.second).text());
      rep.note("the pair can be added without breaking monotonicity");
      return rep;
    }
  }
  rep.note("maximal within " + S.name);
  return rep;
}

OperatorGraph inverse_operator(const OperatorGraph& T) {
  return OperatorGraph(T.family(), T.pairs(), !T.transposed());
}

OperatorGraph combine_operators(const Rational& c1, const OperatorGraph& T1,
                                const Rational& c2, const OperatorGraph& T2) {
  if (c1.is_negative() || c2.is_negative())
    throw std::invalid_argument("operator combinations need nonnegative coefficients");
  if (T1.domain() != T2.domain())
    throw std::invalid_argument("combining operators across different domains");
  if (T1.transposed() || T2.transposed())
    throw std::invalid_argument("combine the forward reading, not the inverse");
  const DomainSpec& dom = T1.domain();

  std::vector<ElementaryFunction> members;
  std::vector<std::pair<int, int>> pairs;
  auto find_or_add = [&](ElementaryFunction f) -> int {
    for (std::size_t k = 0; k < members.size(); ++k)
      if (members[k].same_function(f)) return static_cast<int>(k);
    members.push_back(std::move(f));
    return static_cast<int>(members.size() - 1);
  };

  for (std::size_t p = 0; p < dom.points.size(); ++p) {
    std::vector<int> u1 = T1.image_of(static_cast<int>(p));
    std::vector<int> u2 = T2.image_of(static_cast<int>(p));
    for (int i : u1) {
      for (int j : u2) {
        const ElementaryFunction& a = T1.family()->member(i);
        const ElementaryFunction& b = T2.family()->member(j);
        std::string text = c1.to_string() + "*(" + a.text() + ") + " + c2.to_string() + "*(" +
                           b.text() + ")";
        ElementaryFunction comb =
            member_combine(dom, {{c1, &a}, {c2, &b}}, Rational(0), text);
        pairs.emplace_back(static_cast<int>(p), find_or_add(std::move(comb)));
      }
    }
  }
  // family construction dedups identically, so indices survive
  FamilyRef fam = make_family(dom, members);
  if (fam->size() != members.size())
    throw std::logic_error("combined family unexpectedly collapsed");
  return OperatorGraph(fam, std::move(pairs));
}

OperatorGraph subdifferential_operator(const TargetFunction& f, const FamilyRef& L) {
  if (!L->domain().is_finite())
    throw std::invalid_argument("subdifferential graphs need a finite backend");
  std::vector<std::pair<int, int>> pairs;
  for (int p : f.dom_indices()) {
    SubdifferentialSet sd = subdifferential(f, L, L->domain().points[static_cast<std::size_t>(p)]);
    for (int m : sd.indices) pairs.emplace_back(p, m);
  }
  return OperatorGraph(L, std::move(pairs));
}

RuleReport assumption_check(const TargetFunction& f, const FamilyRef& L, const FamilyRef& Lin,
                            const Point& x, const Rational& a) {
  RuleReport rep;
  rep.rule = "boundedness-and-support-sum assumption";
  const DomainSpec& dom = L->domain();
  if (!a.is_positive()) throw std::invalid_argument("cone scale must be positive");

  ElementaryFunction cone = cone_member(dom, a, x);
  if (!Lin->find(zero_member(dom)))
    throw std::invalid_argument("Lin must contain the zero function");
  if (!Lin->find(cone))
    throw std::invalid_argument("Lin must contain the cone " + cone.text());

  TargetFunction g = TargetFunction::from_elementary(cone, dom);
  TargetFunction fg = target_add(f, g);

  bool bounded;
  if (dom.is_real_line()) {
    bounded = !fg.is_neg_inf() && fg.pl().left_slope() <= Rational(0) &&
              fg.pl().right_slope() >= Rational(0);
    if (bounded) {
      PLSupremum inf = pl_infimum(fg.pl());
      rep.note("infimum " + inf.value.to_string());
    }
  } else {
    bounded = true;
    std::optional<ExtReal> lo;
    for (const ExtReal& v : fg.table()) {
      if (v.is_neg_inf()) bounded = false;
      if (v.is_finite() && (!lo || v < *lo)) lo = v;
    }
    if (bounded && lo) rep.note("infimum " + lo->to_string());
  }
  if (!bounded) rep.note("f + " + cone.text() + " is unbounded below");

  ConjugateSumResult cs = conjugate_sum_check(f, L, g, Lin);
  if (!cs.hypothesis) rep.note("support-sum condition fails for (f, " + cone.text() + ")");
  if (!cs.report.ok()) {
    rep.conclusion = ConclusionStatus::violated;
    rep.note("conjugate-of-sum check reported a defect");
  }

  rep.hypothesis = (bounded && cs.hypothesis) ? HypothesisStatus::holds : HypothesisStatus::fails;
  rep.witness("cone", cone.text());
  return rep;
}

BronstedResult bronsted_rockafellar_search(const TargetFunction& f, const FamilyRef& L,
                                           const FamilyRef& Lin, const Point& y, int v_index,
                                           const Rational& lambda, const Rational& mu) {
  const DomainSpec& dom = L->domain();
  if (dom.dimension != 1)
    throw std::invalid_argument("the search runs on one-dimensional domains");
  if (!lambda.is_positive() || !mu.is_positive())
    throw std::invalid_argument("lambda and mu must be positive");
  Rational fy = [&] {
    ExtReal v = f.value_at(y);
    if (!v.is_finite()) throw std::domain_error("y lies outside the domain of f");
    return v.finite_value();
  }();

  const ElementaryFunction& v = L->member(v_index);
  ConjugateTable conj = conjugate(f, L);
  const ExtReal& fv = conj.values()[static_cast<std::size_t>(v_index)];
  Rational vy = v.eval(dom, y);
  // slack precondition: f(y) + f*(v) <= v(y) + lambda*mu
  if (!fv.is_finite() || fv.finite_value() + fy > vy + lambda * mu)
    throw std::invalid_argument("slack precondition violated: f(y, v) exceeds lambda*mu");

  BronstedResult out{std::nullopt, family_sum(L, Lin), RuleReport{}};
  RuleReport& rep = out.report;
  rep.rule = "approximate-to-exact subgradient trade";
  Rational slack = fv.finite_value() + fy - vy;
  rep.note("slack " + slack.to_string());

  // zero slack: v itself is a subgradient at y
  SubdifferentialSet at_y = subdifferential(f, L, y);
  if (at_y.contains(v_index)) {
    ElementaryFunction as_sum =
        member_combine(dom, {{Rational(1), &v}}, Rational(0), v.text());
    auto widx = out.sum.family->find(as_sum);
    if (!widx) throw std::logic_error("v + 0 missing from the summed family");
    out.witness = BronstedWitness{y, *widx, Rational(0)};
    rep.note("v is already a subgradient at y");
    return out;
  }

  RuleReport assumption = assumption_check(f, L, Lin, y, mu);
  if (assumption.hypothesis != HypothesisStatus::holds)
    throw std::invalid_argument("assumption fails for (f, L, Lin) at y");

  // candidate points within |z - y| <= lambda
  std::vector<Point> candidates;
  if (dom.is_finite()) {
    for (const Point& p : dom.points)
      if ((p[0] - y[0]).abs() <= lambda) candidates.push_back(p);
  } else {
    std::vector<Rational> xs{y[0], y[0] - lambda, y[0] + lambda};
    auto keep = [&](const Rational& b) {
      if ((b - y[0]).abs() <= lambda) xs.push_back(b);
    };
    for (const Rational& b : f.pl().breakpoints()) keep(b);
    for (const ElementaryFunction& m : out.sum.family->members())
      for (const Rational& b : m.pl().breakpoints()) keep(b);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const Rational& c : xs) candidates.push_back(point1(c));
  }
  std::sort(candidates.begin(), candidates.end(), canonical_point_less);

  for (const Point& z : candidates) {
    if (!f.value_at(z).is_finite()) continue;
    SubdifferentialSet sd = subdifferential(f, out.sum.family, z);
    for (int w : sd.indices) {
      ElementaryFunction diff =
          member_combine(dom, {{Rational(1), &out.sum.family->member(w)}, {Rational(-1), &v}},
                         Rational(0), "w - v");
      auto slope = linear_slope_1d(dom, diff);
      if (slope && slope->abs() <= mu) {
        out.witness = BronstedWitness{z, w, *slope};
        rep.witness("z", point_to_string(z));
        rep.witness("w", out.sum.family->member(w).text());
        rep.witness("slope", slope->to_string());
        return out;
      }
    }
  }
  rep.conclusion = ConclusionStatus::violated;
  rep.note("no witness in the candidate lattice despite verified preconditions");
  return out;
}

RuleReport zero_subgradient_check(const TargetFunction& f, const FamilyRef& L,
                                  const FamilyRef& Lin) {
  RuleReport rep;
  rep.rule = "zero-subgradient-at-origin";
  const DomainSpec& dom = L->domain();
  if (!dom.is_finite())
    throw std::invalid_argument("the check enumerates a finite backend");
  Point origin(static_cast<std::size_t>(dom.dimension), Rational(0));
  auto oi = dom.point_index(origin);
  if (!oi) throw std::invalid_argument("0 is not representable in the domain");
  ElementaryFunction zero = zero_member(dom);
  auto zi = L->find(zero);
  if (!zi) rep.note("the zero function is not in L; the conclusion cannot hold");

  bool hyp = true;
  for (int p : f.dom_indices()) {
    const Point& xp = dom.points[static_cast<std::size_t>(p)];
    SubdifferentialSet sd = subdifferential(f, L, xp);
    for (int m : sd.indices) {
      if (L->member(m).table()[static_cast<std::size_t>(p)] < Rational(0)) {
        hyp = false;
        rep.witness("x", point_to_string(xp));
        rep.witness("u", L->member(m).text());
        rep.witness("u(x)", L->member(m).table()[static_cast<std::size_t>(p)].to_string());
        break;
      }
    }
    if (!hyp) break;
  }
  rep.hypothesis = hyp ? HypothesisStatus::holds : HypothesisStatus::fails;

  if (Lin->size() > 0 && Lin->find(zero) && dom.dimension == 1) {
    ElementaryFunction cone = cone_member(dom, Rational(1), origin);
    if (Lin->find(cone)) {
      RuleReport assumption = assumption_check(f, L, Lin, origin, Rational(1));
      rep.note(std::string("assumption at the origin: ") +
               to_string(assumption.hypothesis));
    }
  }

  bool conclusion = zi && f.value_at(origin).is_finite() &&
                    subdifferential(f, L, origin).contains(*zi);
  if (!conclusion) {
    rep.conclusion = ConclusionStatus::violated;
    rep.note("0 is not a subgradient at the origin");
  }
  if (!hyp) rep.note("hypothesis fails; the conclusion is not asserted");
  return rep;
}

}  // namespace absconv
