#pragma once

#include <functional>
#include <string>
#include <vector>

#include "recprs/poly.hpp"

namespace recprs {

/// (alpha_i, beta_i) of one PRS step alpha*P_{i-2} = q*P_{i-1} + beta*P_i.
struct StepFactors {
  Rational alpha;
  Rational beta;
};

/// What a division rule sees when choosing the factors for P_i at level k.
/// `remainder` is P_{i-2} mod P_{i-1} (field division, alpha = 1).
struct StepContext {
  int level;
  int index;
  const Poly& remainder;
};

/// Caller-supplied division rule. The rule may depend on the step position
/// and on the plain remainder (the monic rule does); returned factors must
/// be nonzero.
class DivisionRule {
 public:
  using Fn = std::function<StepFactors(const StepContext&)>;

  DivisionRule(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const noexcept { return name_; }
  /// Throws InvalidRule if the rule returns a zero factor.
  StepFactors operator()(const StepContext& ctx) const;

 private:
  std::string name_;
  Fn fn_;
};

/// Constant rule (1, -1): negated remainders, the Sturm sequence.
DivisionRule sturm_rule();
/// alpha = 1, beta = lc(remainder): every P_i for i >= 3 is monic.
DivisionRule monic_rule();

struct PrsStep {
  Rational alpha;
  Rational beta;
  Poly quotient;  // q_{i-1}
};

/// One polynomial remainder sequence (P_1, ..., P_l). `steps[i-3]` holds the
/// factors and quotient that produced P_i.
struct Prs {
  std::vector<Poly> elements;
  std::vector<PrsStep> steps;

  std::size_t length() const noexcept { return elements.size(); }
  /// 1-indexed P_i.
  const Poly& element(int i) const;
  const PrsStep& step(int i) const;
  int n(int i) const { return element(i).degree().value(); }
  const Rational& c(int i) const { return element(i).lc(); }
  int d(int i) const { return n(i) - n(i + 1); }
  /// True iff the last element is a nonzero constant.
  bool complete() const;
};

/// Pre: f, g nonzero and deg f > deg g. Throws ZeroInput, DegreeOrder.
Prs compute_prs(const Poly& f, const Poly& g, const DivisionRule& rule, int level = 1);

/// Degrees of the recursive PRS that the matrix constructions are indexed
/// by: m = deg F, n = deg G, j[0] = m and j[k] = degree of the last element
/// of level k.
struct RecursiveIndices {
  int m = 0;
  int n = 0;
  std::vector<int> j;

  int levels() const noexcept { return static_cast<int>(j.size()) - 1; }
};

/// Chain of PRSs where level k+1 starts from (P_l^(k), d/dx P_l^(k)) and
/// the last level ends in a nonzero constant. Levels and elements are
/// 1-indexed in the accessors, following P_i^(k).
class RecursivePrs {
 public:
  RecursivePrs(std::vector<Prs> levels, std::string rule_name);

  int t() const noexcept { return static_cast<int>(levels_.size()); }
  const std::vector<Prs>& levels() const noexcept { return levels_; }
  const Prs& level(int k) const;
  const std::string& rule_name() const noexcept { return rule_name_; }

  const Poly& P(int k, int i) const { return level(k).element(i); }
  int n(int k, int i) const { return level(k).n(i); }
  const Rational& c(int k, int i) const { return level(k).c(i); }
  int d(int k, int i) const { return level(k).d(i); }
  int l(int k) const { return static_cast<int>(level(k).length()); }
  /// j_0 = m, j_k = n_{l_k}^(k).
  int j(int k) const;

  const Poly& F() const { return P(1, 1); }
  const Poly& G() const { return P(1, 2); }
  bool complete() const { return levels_.back().complete(); }
  RecursiveIndices indices() const;
  std::size_t polynomial_count() const;

 private:
  std::vector<Prs> levels_;
  std::string rule_name_;
};

/// Pre: as compute_prs, and deg g >= 1.
RecursivePrs compute_recursive_prs(const Poly& f, const Poly& g, const DivisionRule& rule);

/// Recursive Sturm chain of (p, p'); accepts linear p, whose single level is
/// the complete pair (p, p').
RecursivePrs recursive_sturm_sequence(const Poly& p);

/// gamma * gcd(f, g) as the last element of the Sturm PRS (not normalized).
Poly gcd_by_prs(const Poly& f, const Poly& g);

}  // namespace recprs
