#include "recprs/prs.hpp"

#include <string>
#include <utility>

#include "recprs/error.hpp"

namespace recprs {

StepFactors DivisionRule::operator()(const StepContext& ctx) const {
  StepFactors f = fn_(ctx);
  if (f.alpha == 0 || f.beta == 0) {
    throw Error(ErrorKind::InvalidRule, "division rule '" + name_ + "' returned a zero factor");
  }
  return f;
}

DivisionRule sturm_rule() {
  return {"sturm", [](const StepContext&) { return StepFactors{1, -1}; }};
}

DivisionRule monic_rule() {
  return {"monic", [](const StepContext& ctx) { return StepFactors{1, ctx.remainder.lc()}; }};
}

const Poly& Prs::element(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > elements.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "PRS element " + std::to_string(i) + " out of range");
  }
  return elements[static_cast<std::size_t>(i - 1)];
}

const PrsStep& Prs::step(int i) const {
  if (i < 3 || static_cast<std::size_t>(i) > elements.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "PRS step " + std::to_string(i) + " out of range");
  }
  return steps[static_cast<std::size_t>(i - 3)];
}

bool Prs::complete() const {
  return !elements.empty() && elements.back().degree() == 0;
}

Prs compute_prs(const Poly& f, const Poly& g, const DivisionRule& rule, int level) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroInput, "PRS input is zero");
  if (f.degree() <= g.degree()) {
    throw Error(ErrorKind::DegreeOrder, "PRS requires deg F > deg G");
  }
  Prs prs;
  prs.elements = {f, g};
  while (true) {
    const Poly& a = prs.elements[prs.elements.size() - 2];
    const Poly& b = prs.elements.back();
    DivRem qr = divrem(a, b);
    if (qr.remainder.is_zero()) break;
    const int index = static_cast<int>(prs.elements.size()) + 1;
    StepFactors ab = rule(StepContext{level, index, qr.remainder});
    // alpha*a = (alpha*q)*b + alpha*r, and P_i = alpha*r / beta.
    Poly next = qr.remainder.scaled(ab.alpha / ab.beta);
    prs.steps.push_back({ab.alpha, ab.beta, qr.quotient.scaled(ab.alpha)});
    prs.elements.push_back(std::move(next));
  }
  return prs;
}

RecursivePrs::RecursivePrs(std::vector<Prs> levels, std::string rule_name)
    : levels_(std::move(levels)), rule_name_(std::move(rule_name)) {
  if (levels_.empty()) throw Error(ErrorKind::IncompletePrs, "recursive PRS has no levels");
}

const Prs& RecursivePrs::level(int k) const {
  if (k < 1 || k > t()) {
    throw Error(ErrorKind::IndexOutOfRange, "level " + std::to_string(k) + " out of range");
  }
  return levels_[static_cast<std::size_t>(k - 1)];
}

int RecursivePrs::j(int k) const {
  if (k == 0) return F().degree().value();
  const Prs& lv = level(k);
  return lv.n(static_cast<int>(lv.length()));
}

RecursiveIndices RecursivePrs::indices() const {
  RecursiveIndices idx;
  idx.m = F().degree().value();
  idx.n = G().degree().value();
  for (int k = 0; k <= t(); ++k) idx.j.push_back(j(k));
  return idx;
}

std::size_t RecursivePrs::polynomial_count() const {
  std::size_t total = 0;
  for (const auto& lv : levels_) total += lv.length();
  return total;
}

namespace {

RecursivePrs build_chain(Poly f, Poly g, const DivisionRule& rule) {
  std::vector<Prs> levels;
  for (int k = 1;; ++k) {
    levels.push_back(compute_prs(f, g, rule, k));
    const Poly& last = levels.back().elements.back();
    if (last.degree() == 0) break;
    f = last;
    g = last.derivative();
  }
  return RecursivePrs(std::move(levels), rule.name());
}

}  // namespace

RecursivePrs compute_recursive_prs(const Poly& f, const Poly& g, const DivisionRule& rule) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroInput, "PRS input is zero");
  if (f.degree() <= g.degree()) throw Error(ErrorKind::DegreeOrder, "requires deg F > deg G");
  if (g.degree() < 1) throw Error(ErrorKind::DegreeOrder, "recursive PRS requires deg G >= 1");
  return build_chain(f, g, rule);
}

RecursivePrs recursive_sturm_sequence(const Poly& p) {
  if (p.is_zero() || p.degree() < 1) {
    throw Error(ErrorKind::ConstantInput, "root counting needs a non-constant polynomial");
  }
  return build_chain(p, p.derivative(), sturm_rule());
}

Poly gcd_by_prs(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroInput, "gcd input is zero");
  Poly a = f;
  Poly b = g;
  if (a.degree() < b.degree()) std::swap(a, b);
  if (a.degree() == b.degree()) {
    Poly r = divrem(a, b).remainder;
    if (r.is_zero()) return b;
    a = std::move(b);
    b = std::move(r);
  }
  return compute_prs(a, b, sturm_rule()).elements.back();
}

}  // namespace recprs
