#pragma once

#include "absconv/subdiff.hpp"

namespace absconv {

/// Finite relation between domain points and family members, T : X => L.
/// The transposed flag marks the inverse reading T^{-1} : L => X; the
/// monotonicity inequality is symmetric under transposition.
class OperatorGraph {
 public:
  OperatorGraph(FamilyRef family, std::vector<std::pair<int, int>> pairs,
                bool transposed = false);

  const FamilyRef& family() const { return family_; }
  const DomainSpec& domain() const { return family_->domain(); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool transposed() const { return transposed_; }

  std::vector<int> image_of(int point_index) const;
  bool has_pair(int point_index, int member_index) const;

  friend bool operator==(const OperatorGraph& a, const OperatorGraph& b) {
    return a.family_ == b.family_ && a.pairs_ == b.pairs_ && a.transposed_ == b.transposed_;
  }

 private:
  FamilyRef family_;
  std::vector<std::pair<int, int>> pairs_;  // (point index, member index), sorted
  bool transposed_;
};

/// The candidate grid maximality is decided against; always a superset of the
/// operator's pairs and always named in reports.
struct CandidateSet {
  std::vector<std::pair<int, int>> pairs;
  std::string name;

  static CandidateSet full_grid(const OperatorGraph& T);
};

/// u(x) - u(y) + v(y) - v(x) >= 0 over all pairs of graph elements; a
/// violation reports the witness quadruple.
RuleReport is_monotone(const OperatorGraph& T);

/// Scans S \ T for a pair consistent with all of T; finding one refutes
/// maximality within S.
RuleReport is_maximal_within(const OperatorGraph& T, const CandidateSet& S);

OperatorGraph inverse_operator(const OperatorGraph& T);

/// Pairs (x, c1*u1 + c2*u2) for u1 in T1(x), u2 in T2(x); empty where either
/// operand is empty.  Coefficients must be nonnegative.
OperatorGraph combine_operators(const Rational& c1, const OperatorGraph& T1,
                                const Rational& c2, const OperatorGraph& T2);

/// The full relation { (x, l) : l in the subdifferential of f at x } over the
/// effective domain (finite backends).
OperatorGraph subdifferential_operator(const TargetFunction& f, const FamilyRef& L);

/// Checks that f + a|.-x| is bounded below and that the support-sum condition
/// holds for (f, a|.-x|) over (L, Lin).  Lin must contain the zero function
/// and the scaled cone itself.
RuleReport assumption_check(const TargetFunction& f, const FamilyRef& L, const FamilyRef& Lin,
                            const Point& x, const Rational& a);

struct BronstedWitness {
  Point z;
  int w_index;      // member of L + Lin
  Rational slope;   // the linear correction w - v
};

struct BronstedResult {
  std::optional<BronstedWitness> witness;
  FamilySum sum;  // L + Lin, where w lives
  RuleReport report;
};

/// Desk-scale search for the approximate-to-exact subgradient trade: given
/// slack f(y) + f*(v) - v(y) <= lambda*mu, finds z within lambda of y and
/// w in the summed subdifferential at z with w - v linear of slope at most mu.
/// One-dimensional domains only; candidate points are the grid (finite) or
/// the breakpoint lattice inside the window (line).
BronstedResult bronsted_rockafellar_search(const TargetFunction& f, const FamilyRef& L,
                                           const FamilyRef& Lin, const Point& y, int v_index,
                                           const Rational& lambda, const Rational& mu);

/// If every subgradient is nonnegative at its base point, zero is a
/// subgradient at the origin.  Hypothesis checked by full enumeration.
RuleReport zero_subgradient_check(const TargetFunction& f, const FamilyRef& L,
                                  const FamilyRef& Lin);

}  // namespace absconv
