#include "absconv/subdiff.hpp"

#include <algorithm>
#include <stdexcept>

namespace absconv {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Rational require_finite_at(const TargetFunction& f, const Point& x) {
  ExtReal v = f.value_at(x);
  if (!v.is_finite())
    throw std::domain_error("point outside domain of f: " + point_to_string(x));
  return v.finite_value();
}

}  // namespace

bool SubdifferentialSet::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::string SubdifferentialSet::to_string() const {
  if (indices.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ", ";
    s += family->member(indices[i]).text();
  }
  return s + "}";
}

SubdifferentialSet subdifferential(const TargetFunction& f, const FamilyRef& L,
                                   const Point& x) {
  if (f.domain() != L->domain())
    throw std::invalid_argument("subdifferential across different domains");
  Rational fx = require_finite_at(f, x);

  std::vector<int> idx;
  if (L->domain().is_real_line()) {
    for (std::size_t i = 0; i < L->size(); ++i) {
      const ElementaryFunction& l = L->member(static_cast<int>(i));
      PLFunction d = pl_combine({{Rational(1), l.pl()}, {Rational(-1), f.pl()}}, Rational(0));
      if (pl_supremum(d).value == ExtReal(l.pl().value_at(x[0]) - fx))
        idx.push_back(static_cast<int>(i));
    }
  } else {
    int xi = *L->domain().point_index(x);
    for (std::size_t i = 0; i < L->size(); ++i) {
      const ElementaryFunction& l = L->member(static_cast<int>(i));
      Rational lx = l.table()[static_cast<std::size_t>(xi)];
      bool in = true;
      for (std::size_t p = 0; p < L->domain().points.size(); ++p) {
        const ExtReal& fy = f.table()[p];
        if (fy.is_pos_inf()) continue;  // constraint holds trivially
        if (fy.is_neg_inf() || fy.finite_value() < fx + l.table()[p] - lx) {
          in = false;
          break;
        }
      }
      if (in) idx.push_back(static_cast<int>(i));
    }
  }
  return SubdifferentialSet{L, std::move(idx), x};
}

RuleReport moreau_verify(const TargetFunction& f, const FamilyRef& L, const Point& x) {
  RuleReport rep;
  rep.rule = "moreau-equality";
  Rational fx = require_finite_at(f, x);
  ConjugateTable t = conjugate(f, L);
  SubdifferentialSet sd = subdifferential(f, L, x);
  for (std::size_t i = 0; i < L->size(); ++i) {
    const ElementaryFunction& u = L->member(static_cast<int>(i));
    Rational ux = u.eval(L->domain(), x);
    bool equality = t.values()[i] == ExtReal(ux - fx);
    bool in_subdiff = sd.contains(static_cast<int>(i));
    if (equality != in_subdiff) {
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("member", u.text());
      rep.witness("conjugate", t.values()[i].to_string());
      rep.witness("at", point_to_string(x));
    }
  }
  return rep;
}

NormalSet normal_set(const FamilyRef& L, const Point& x, const PointSet& C) {
  if (L->domain() != C.domain())
    throw std::invalid_argument("normal set across different domains");
  if (!C.contains(x)) return NormalSet{L, {}, x, C};  // empty off the set

  std::vector<int> idx;
  if (L->domain().is_real_line()) {
    for (std::size_t i = 0; i < L->size(); ++i) {
      const ElementaryFunction& l = L->member(static_cast<int>(i));
      if (pl_supremum_over(l.pl(), C.intervals()).value <= ExtReal(l.pl().value_at(x[0])))
        idx.push_back(static_cast<int>(i));
    }
  } else {
    int xi = *L->domain().point_index(x);
    for (std::size_t i = 0; i < L->size(); ++i) {
      const ElementaryFunction& l = L->member(static_cast<int>(i));
      Rational lx = l.table()[static_cast<std::size_t>(xi)];
      bool in = true;
      for (int p : C.indices())
        if (l.table()[static_cast<std::size_t>(p)] > lx) {
          in = false;
          break;
        }
      if (in) idx.push_back(static_cast<int>(i));
    }
  }
  return NormalSet{L, std::move(idx), x, C};
}

RuleReport epi_conjugate_check(const TargetFunction& f, const FamilyRef& L,
                               const std::vector<std::pair<int, Rational>>& samples) {
  RuleReport rep;
  rep.rule = "epigraph-conjugate-identity";
  ConjugateTable t = conjugate(f, L);

  std::vector<std::pair<int, Rational>> all = samples;
  for (std::size_t i = 0; i < L->size(); ++i) {
    const ExtReal& v = t.values()[i];
    if (v.is_finite()) {
      all.emplace_back(static_cast<int>(i), v.finite_value());
      all.emplace_back(static_cast<int>(i), v.finite_value() - Rational(1));
      all.emplace_back(static_cast<int>(i), v.finite_value() + Rational(1));
    } else {
      all.emplace_back(static_cast<int>(i), Rational(0));
    }
  }

  for (const auto& [i, c] : all) {
    bool in_epi = ExtReal(c) >= t.values()[static_cast<std::size_t>(i)];
    ElementaryFunction shifted = vertical_element(L->domain(), L->member(i), c);
    bool in_supp = member_dominated_by(L->domain(), shifted, f);
    if (in_epi != in_supp) {
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("member", L->member(i).text());
      rep.witness("c", c.to_string());
      rep.witness("in-epigraph", in_epi ? "true" : "false");
      rep.witness("in-support", in_supp ? "true" : "false");
    }
  }
  rep.note("samples checked: " + std::to_string(all.size()));
  return rep;
}

RuleReport normal_subdiff_check(const TargetFunction& f, const FamilyRef& L, const Point& x,
                                const std::vector<Rational>& c_samples) {
  RuleReport rep;
  rep.rule = "normal-set-subdifferential-link";
  Rational fx = require_finite_at(f, x);
  SubdifferentialSet sd = subdifferential(f, L, x);

  // (l, -1) against epigraph points (y, f(y)) and the sampled lifts
  // (y, f(y)+delta): the constraint is monotone in the lift, so the boundary
  // decides membership exactly.
  std::vector<int> via_normal;
  if (L->domain().is_real_line()) {
    for (std::size_t i = 0; i < L->size(); ++i) {
      const ElementaryFunction& l = L->member(static_cast<int>(i));
      PLFunction d = pl_combine({{Rational(1), l.pl()}, {Rational(-1), f.pl()}}, Rational(0));
      if (pl_supremum(d).value <= ExtReal(l.pl().value_at(x[0]) - fx))
        via_normal.push_back(static_cast<int>(i));
    }
  } else {
    int xi = *L->domain().point_index(x);
    for (std::size_t i = 0; i < L->size(); ++i) {
      const ElementaryFunction& l = L->member(static_cast<int>(i));
      Rational lx = l.table()[static_cast<std::size_t>(xi)];
      bool in = true;
      for (std::size_t p = 0; p < L->domain().points.size() && in; ++p) {
        const ExtReal& fy = f.table()[p];
        if (!fy.is_finite()) continue;
        Rational base = l.table()[p] - lx - (fy.finite_value() - fx);
        if (base > Rational(0)) in = false;
        for (const Rational& d : c_samples)
          if (base - d > Rational(0)) in = false;
      }
      if (in) via_normal.push_back(static_cast<int>(i));
    }
  }
  if (via_normal != sd.indices) {
    rep.conclusion = ConclusionStatus::violated;
    std::vector<int> in_sd = difference(sd.indices, via_normal);
    std::vector<int> in_nm = difference(via_normal, sd.indices);
    for (int i : in_sd) rep.witness("subdifferential-only", L->member(i).text());
    for (int i : in_nm) rep.witness("normal-only", L->member(i).text());
  }
  rep.note("epigraph sampled at the boundary plus " + std::to_string(c_samples.size()) +
           " lifted levels");
  return rep;
}

RuleReport restriction_check(const TargetFunction& f, const FamilyRef& L1,
                             const FamilyRef& L2, const Point& x) {
  if (!family_subset(*L1, *L2))
    throw std::invalid_argument("restriction needs L1 contained in L2");
  RuleReport rep;
  rep.rule = "restriction";

  SubdifferentialSet big = subdifferential(f, L2, x);
  std::vector<int> lhs;  // members of the L2-subdifferential that lie in L1
  for (int i : big.indices) {
    if (auto j = L1->find(L2->member(i))) lhs.push_back(*j);
  }
  lhs = sorted_unique(std::move(lhs));
  SubdifferentialSet small = subdifferential(f, L1, x);
  if (lhs != small.indices) {
    rep.conclusion = ConclusionStatus::violated;
    rep.witness("lhs", make_subset(L1, lhs).to_string());
    rep.witness("rhs", small.to_string());
  }
  return rep;
}

RuleReport shift_rule_check(const TargetFunction& f, const FamilyRef& L,
                            const ElementaryFunction& u, const Point& y, const Point& x) {
  RuleReport rep;
  rep.rule = "shift-rules";
  const DomainSpec& dom = L->domain();
  SubdifferentialSet base = subdifferential(f, L, x);

  // vertical shift: the (L-u)-subdifferential of f-u is the shifted set
  {
    std::vector<ElementaryFunction> shifted;
    shifted.reserve(L->size());
    for (const ElementaryFunction& l : L->members())
      shifted.push_back(member_combine(dom, {{Rational(1), &l}, {Rational(-1), &u}},
                                       Rational(0), "(" + l.text() + ") - (" + u.text() + ")"));
    FamilyRef Lu = make_family(dom, shifted);
    TargetFunction fu = target_add(f, target_negate_member(dom, u));
    std::vector<int> lhs = subdifferential(fu, Lu, x).indices;
    std::vector<int> rhs;
    for (int i : base.indices) {
      ElementaryFunction moved =
          member_combine(dom, {{Rational(1), &L->member(i)}, {Rational(-1), &u}}, Rational(0),
                         "shifted");
      rhs.push_back(*Lu->find(moved));
    }
    rhs = sorted_unique(std::move(rhs));
    if (lhs != rhs) {
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("identity", "vertical");
    }
    // the shifted function is shifted-family convex iff the original is convex
    if (is_abstract_convex(Lu, fu) != is_abstract_convex(L, f)) {
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("identity", "vertical convexity transfer");
    }
  }

  // pinning at y: the L_y-subdifferential is the pinned set
  {
    FamilyRef Ly = family_pin(L, y);
    std::vector<int> lhs = subdifferential(f, Ly, x).indices;
    std::vector<int> rhs;
    for (int i : base.indices) {
      const ElementaryFunction& l = L->member(i);
      ElementaryFunction pinned = vertical_element(dom, l, l.eval(dom, y));
      rhs.push_back(*Ly->find(pinned));
    }
    rhs = sorted_unique(std::move(rhs));
    if (lhs != rhs) {
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("identity", "pinning");
    }
  }

  // horizontal shift: translate the domain by y and compare at x - y
  {
    bool ok = true;
    if (dom.is_real_line()) {
      Rational shift = y[0];
      std::vector<ElementaryFunction> moved;
      for (const ElementaryFunction& l : L->members())
        moved.push_back(ElementaryFunction::from_pl(pl_translate(l.pl(), shift),
                                                    "(" + l.text() + ")@shift"));
      FamilyRef Lh = make_family(dom, moved);
      TargetFunction fh = TargetFunction::from_pl(pl_translate(f.pl(), shift), "f@shift");
      Point xh = point1(x[0] - shift);
      std::vector<int> lhs = subdifferential(fh, Lh, xh).indices;
      std::vector<int> rhs;
      for (int i : base.indices) {
        ElementaryFunction m =
            ElementaryFunction::from_pl(pl_translate(L->member(i).pl(), shift), "m@shift");
        rhs.push_back(*Lh->find(m));
      }
      rhs = sorted_unique(std::move(rhs));
      ok = lhs == rhs && is_abstract_convex(Lh, fh) == is_abstract_convex(L, f);
    } else {
      std::vector<Point> pts;
      pts.reserve(dom.points.size());
      for (const Point& p : dom.points) {
        Point q(p.size());
        for (std::size_t c = 0; c < p.size(); ++c) q[c] = p[c] - y[c];
        pts.push_back(std::move(q));
      }
      DomainSpec domY = DomainSpec::grid(std::move(pts));
      std::vector<ElementaryFunction> moved;
      for (const ElementaryFunction& l : L->members())
        moved.push_back(ElementaryFunction::from_table(l.table(), "(" + l.text() + ")@shift"));
      FamilyRef Lh = make_family(domY, moved);
      TargetFunction fh = TargetFunction::from_table(domY, f.table(), "f@shift");
      Point xh(x.size());
      for (std::size_t c = 0; c < x.size(); ++c) xh[c] = x[c] - y[c];
      std::vector<int> lhs = subdifferential(fh, Lh, xh).indices;
      std::vector<int> rhs;
      for (int i : base.indices)
        rhs.push_back(*Lh->find(
            ElementaryFunction::from_table(L->member(i).table(), "m@shift")));
      rhs = sorted_unique(std::move(rhs));
      ok = lhs == rhs && is_abstract_convex(Lh, fh) == is_abstract_convex(L, f);
    }
    if (!ok) {
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("identity", "horizontal");
    }
  }
  return rep;
}

RuleReport max_rule_verify(const FamilyRef& G, const FamilyRef& L, const Point& x) {
  if (G->size() == 0) throw std::invalid_argument("max rule needs a nonempty G");
  if (!family_subset(*G, *L))
    throw std::invalid_argument("max rule needs G contained in L");
  RuleReport rep;
  rep.rule = "max-rule";
  const DomainSpec& dom = L->domain();

  std::vector<int> all(G->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  TargetFunction f = TargetFunction::envelope(G, all);
  Rational fx = require_finite_at(f, x);

  std::vector<int> active;
  for (std::size_t i = 0; i < G->size(); ++i)
    if (G->member(static_cast<int>(i)).eval(dom, x) == fx) active.push_back(static_cast<int>(i));

  FamilyRef Lx = family_pin(L, x);
  std::vector<int> pinned_active;
  for (int i : active) {
    const ElementaryFunction& g = G->member(i);
    ElementaryFunction pinned = vertical_element(dom, g, g.eval(dom, x));
    pinned_active.push_back(*Lx->find(pinned));
  }
  SupportSet hull = co_set(Lx, make_subset(Lx, sorted_unique(std::move(pinned_active))));
  SubdifferentialSet sd = subdifferential(f, Lx, x);

  rep.witness("active-set", make_subset(G, active).to_string());
  if (!subset_of(hull.indices, sd.indices)) {
    rep.conclusion = ConclusionStatus::violated;
    for (int i : difference(hull.indices, sd.indices))
      rep.witness("hull-member-outside-subdifferential", Lx->member(i).text());
    return rep;
  }
  std::vector<int> strict = difference(sd.indices, hull.indices);
  if (strict.empty()) {
    rep.conclusion = ConclusionStatus::equal;
    return rep;
  }
  rep.conclusion = ConclusionStatus::strict_inclusion;
  for (int i : strict) {
    rep.witness("strict-member", Lx->member(i).text());
    Point w = separate_point_from_set(Lx, hull, Lx->member(i));
    rep.witness("separating-point", point_to_string(w));
  }
  return rep;
}

RuleReport composition_subdiff_verify(const TargetFunction& f, const FamilyRef& L,
                                      const std::vector<int>& point_map, const DomainSpec& Y,
                                      const Point& x) {
  RuleReport rep;
  rep.rule = "composition";
  const DomainSpec& X = L->domain();
  if (!X.is_finite() || !Y.is_finite())
    throw std::invalid_argument("composition rule runs on finite backends");

  FamilyRef Lcomp = family_compose(L, point_map, Y);
  auto xi = Y.point_index(x);
  if (!xi) throw std::invalid_argument("composition point outside the new domain");
  const Point& ux = X.points[static_cast<std::size_t>(point_map[static_cast<std::size_t>(*xi)])];

  std::vector<ExtReal> fcomp_vals;
  fcomp_vals.reserve(point_map.size());
  for (int t : point_map) fcomp_vals.push_back(f.table()[static_cast<std::size_t>(t)]);
  TargetFunction fcomp =
      TargetFunction::from_table(Y, std::move(fcomp_vals), "(" + f.text() + ") o u");

  SubdifferentialSet base = subdifferential(f, L, ux);
  std::vector<int> lhs;
  for (int i : base.indices) {
    std::vector<Rational> vals;
    vals.reserve(point_map.size());
    for (int t : point_map)
      vals.push_back(L->member(i).table()[static_cast<std::size_t>(t)]);
    lhs.push_back(*Lcomp->find(ElementaryFunction::from_table(std::move(vals), "tmp")));
  }
  lhs = sorted_unique(std::move(lhs));
  std::vector<int> rhs = subdifferential(fcomp, Lcomp, x).indices;

  std::vector<int> image = point_map;
  image = sorted_unique(std::move(image));
  bool onto = subset_of(f.dom_indices(), image);
  rep.hypothesis = onto ? HypothesisStatus::holds : HypothesisStatus::fails;
  rep.note(onto ? "u covers the effective domain of f" : "u misses part of the domain of f");

  if (!subset_of(lhs, rhs)) {
    rep.hypothesis = HypothesisStatus::not_checked;
    rep.conclusion = ConclusionStatus::violated;
    for (int i : difference(lhs, rhs))
      rep.witness("composed-subgradient-missing", Lcomp->member(i).text());
    return rep;
  }
  if (lhs == rhs) {
    rep.conclusion = ConclusionStatus::equal;
    return rep;
  }
  rep.conclusion = onto ? ConclusionStatus::violated : ConclusionStatus::strict_inclusion;
  for (int i : difference(rhs, lhs)) rep.witness("extra-member", Lcomp->member(i).text());
  return rep;
}

ConjugateSumResult conjugate_sum_check(const TargetFunction& f1, const FamilyRef& L1,
                                       const TargetFunction& f2, const FamilyRef& L2) {
  if (L1->domain() != L2->domain() || f1.domain() != L1->domain() ||
      f2.domain() != L2->domain())
    throw std::invalid_argument("conjugate sum check across different domains");

  ConjugateSumResult out{RuleReport{}, family_sum(L1, L2), {}, {}, false};
  RuleReport& rep = out.report;
  rep.rule = "conjugate-of-sum";

  ConjugateTable t1 = conjugate(f1, L1);
  ConjugateTable t2 = conjugate(f2, L2);
  ConjugateTable conv = inf_convolution(t1, t2, out.sum);
  TargetFunction fsum = target_add(f1, f2);
  ConjugateTable direct = conjugate(fsum, out.sum.family);
  out.conv_values = conv.values();
  out.direct_values = direct.values();

  bool hypothesis = true;
  for (std::size_t k = 0; k < out.sum.family->size(); ++k) {
    if (conv.values()[k] < direct.values()[k]) {
      // weak duality cannot fail; any occurrence is an arithmetic defect
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("weak-duality-breach", out.sum.family->member(static_cast<int>(k)).text());
    }
    if (conv.values()[k] != direct.values()[k]) {
      if (hypothesis) {  // record the first few witnesses only
        rep.witness("member", out.sum.family->member(static_cast<int>(k)).text());
        rep.witness("convolution", conv.values()[k].to_string());
        rep.witness("direct", direct.values()[k].to_string());
      }
      hypothesis = false;
    }
  }
  out.hypothesis = hypothesis;
  rep.hypothesis = hypothesis ? HypothesisStatus::holds : HypothesisStatus::fails;

  // epigraph-sum identity on boundary samples
  for (std::size_t k = 0; k < out.sum.family->size(); ++k) {
    std::vector<Rational> cs;
    if (conv.values()[k].is_finite()) {
      cs = {conv.values()[k].finite_value(), conv.values()[k].finite_value() - Rational(1),
            conv.values()[k].finite_value() + Rational(1)};
    } else {
      cs = {Rational(0)};
    }
    for (const Rational& c : cs) {
      bool lhs = conv.values()[k] <= ExtReal(c);
      bool rhs = false;
      for (const auto& [i, j] : out.sum.splits[k]) {
        const ExtReal &a = t1.values()[static_cast<std::size_t>(i)],
                      &b = t2.values()[static_cast<std::size_t>(j)];
        if (a.is_pos_inf() || b.is_pos_inf()) continue;
        if (a.is_neg_inf() || b.is_neg_inf() || a + b <= ExtReal(c)) {
          rhs = true;
          break;
        }
      }
      if (lhs != rhs) {
        rep.conclusion = ConclusionStatus::violated;
        rep.witness("epigraph-sum-mismatch",
                    out.sum.family->member(static_cast<int>(k)).text() + " at c=" + c.to_string());
      }
    }
  }

  // hull identity (f1+f2)* = co(f1* (+) f2*): valid for proper convex inputs
  bool joint_dom = false;
  if (f1.domain().is_real_line()) {
    joint_dom = !f1.is_neg_inf() && !f2.is_neg_inf();
  } else {
    for (std::size_t p = 0; p < f1.table().size(); ++p)
      if (f1.table()[p].is_finite() && f2.table()[p].is_finite()) joint_dom = true;
  }
  bool convex1 = f1.same_as(biconjugate(f1, L1));
  bool convex2 = f2.same_as(biconjugate(f2, L2));
  if (joint_dom && convex1 && convex2) {
    std::vector<ExtReal> hull = hull_values_on_family(conv);
    for (std::size_t k = 0; k < hull.size(); ++k) {
      if (hull[k] != direct.values()[k]) {
        rep.conclusion = ConclusionStatus::violated;
        rep.witness("hull-identity-mismatch",
                    out.sum.family->member(static_cast<int>(k)).text());
        rep.witness("hull", hull[k].to_string());
        rep.witness("direct", direct.values()[k].to_string());
      }
    }
    rep.note("hull identity checked on every summed member");
  } else {
    rep.note(joint_dom ? "hull identity skipped: inputs not abstract convex"
                       : "hull identity skipped: effective domains do not meet");
  }
  return out;
}

RuleReport normal_sum_check(const PointSet& C, const FamilyRef& L1, const PointSet& D,
                            const FamilyRef& L2, const Point& x) {
  if (!L1->domain().is_finite())
    throw std::invalid_argument("normal sum rule runs on finite backends");
  RuleReport rep;
  rep.rule = "normal-set-sum";

  ConjugateSumResult cs =
      conjugate_sum_check(TargetFunction::indicator(C), L1, TargetFunction::indicator(D), L2);
  bool closed1 = point_set_hull(L1, C) == C;
  bool closed2 = point_set_hull(L2, D) == D;
  bool hyp = cs.hypothesis && closed1 && closed2;
  rep.hypothesis = hyp ? HypothesisStatus::holds : HypothesisStatus::fails;
  if (!closed1) rep.note("C is not hull-closed for L1");
  if (!closed2) rep.note("D is not hull-closed for L2");
  if (!cs.hypothesis) rep.note("support-sum condition fails on the indicators");

  PointSet CD = PointSet::intersect(C, D);
  NormalSet lhs = normal_set(cs.sum.family, x, CD);
  NormalSet n1 = normal_set(L1, x, C);
  NormalSet n2 = normal_set(L2, x, D);
  std::vector<int> rhs = minkowski_indices(cs.sum, n1.indices, n2.indices);

  if (!CD.contains(x)) {
    if (!lhs.indices.empty() || !rhs.empty()) {
      rep.hypothesis = HypothesisStatus::not_checked;
      rep.conclusion = ConclusionStatus::violated;
      rep.witness("off-set-convention", "normal sets must both be empty off the set");
    }
    rep.note("x lies outside the intersection; both sides empty by convention");
    return rep;
  }

  if (!subset_of(rhs, lhs.indices)) {
    rep.hypothesis = HypothesisStatus::not_checked;  // this inclusion is unconditional
    rep.conclusion = ConclusionStatus::violated;
    for (int i : difference(rhs, lhs.indices))
      rep.witness("sum-member-not-normal", cs.sum.family->member(i).text());
    return rep;
  }
  if (lhs.indices == rhs) {
    rep.conclusion = ConclusionStatus::equal;
  } else if (hyp) {
    rep.conclusion = ConclusionStatus::violated;
    for (int i : difference(lhs.indices, rhs))
      rep.witness("normal-member-unreached", cs.sum.family->member(i).text());
  } else {
    rep.conclusion = ConclusionStatus::strict_inclusion;
  }
  return rep;
}

SumRuleResult sum_rule_verify(const TargetFunction& f1, const FamilyRef& L1,
                              const TargetFunction& f2, const FamilyRef& L2, const Point& x) {
  if (!f1.value_at(x).is_finite() || !f2.value_at(x).is_finite())
    throw std::domain_error("sum rule needs x in both effective domains");

  ConjugateSumResult cs = conjugate_sum_check(f1, L1, f2, L2);
  SumRuleResult out{RuleReport{}, cs.sum, {}, {}};
  RuleReport& rep = out.report;
  rep.rule = "sum-rule";
  rep.hypothesis = cs.hypothesis ? HypothesisStatus::holds : HypothesisStatus::fails;
  if (!cs.hypothesis) rep.note("support-sum condition fails; only the inclusion is asserted");

  TargetFunction fsum = target_add(f1, f2);
  out.combined = subdifferential(fsum, cs.sum.family, x).indices;
  SubdifferentialSet s1 = subdifferential(f1, L1, x);
  SubdifferentialSet s2 = subdifferential(f2, L2, x);
  out.minkowski = minkowski_indices(cs.sum, s1.indices, s2.indices);

  if (!subset_of(out.minkowski, out.combined)) {
    rep.hypothesis = HypothesisStatus::not_checked;  // the easy inclusion is unconditional
    rep.conclusion = ConclusionStatus::violated;
    for (int i : difference(out.minkowski, out.combined))
      rep.witness("sum-not-subgradient", cs.sum.family->member(i).text());
    return out;
  }
  if (out.combined == out.minkowski) {
    rep.conclusion = ConclusionStatus::equal;
    return out;
  }
  if (cs.hypothesis) {
    rep.conclusion = ConclusionStatus::violated;
    for (int i : difference(out.combined, out.minkowski))
      rep.witness("subgradient-not-split", cs.sum.family->member(i).text());
    return out;
  }
  rep.conclusion = ConclusionStatus::strict_inclusion;
  for (int i : difference(out.combined, out.minkowski))
    rep.witness("subgradient-not-split", cs.sum.family->member(i).text());
  return out;
}

std::vector<int> minkowski_indices(const FamilySum& sum, const std::vector<int>& left,
                                   const std::vector<int>& right) {
  std::vector<int> out;
  for (std::size_t k = 0; k < sum.splits.size(); ++k) {
    for (const auto& [i, j] : sum.splits[k]) {
      if (std::binary_search(left.begin(), left.end(), i) &&
          std::binary_search(right.begin(), right.end(), j)) {
        out.push_back(static_cast<int>(k));
        break;
      }
    }
  }
  return out;
}

}  // namespace absconv
