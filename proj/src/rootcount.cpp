#include "recprs/rootcount.hpp"

#include "recprs/error.hpp"

namespace recprs {

SignSequence::SignSequence(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& v : values_) {
    if (sgn(v) == 0) throw Error(ErrorKind::ZeroPolynomial, "sign sequence entry is zero");
  }
}

SignSequence lambda_at_infinity(const Prs& level, Infinity end) {
  std::vector<Rational> out;
  out.reserve(level.length());
  for (const Poly& p : level.elements) {
    Rational v = p.lc();
    if (end == Infinity::Negative && p.degree().value() % 2 != 0) v = -v;
    out.push_back(std::move(v));
  }
  return SignSequence(std::move(out));
}

int sign_variations(const SignSequence& s) {
  if (s.size() == 0) throw Error(ErrorKind::EmptySequence, "sign sequence is empty");
  int changes = 0;
  const auto& v = s.values();
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (sgn(v[i - 1]) != sgn(v[i])) ++changes;
  }
  return changes;
}

RootCount count_real_roots_with_multiplicity(const Poly& p) {
  const RecursivePrs rprs = recursive_sturm_sequence(p);
  RootCount out;
  for (const Prs& level : rprs.levels()) {
    const int c = sign_variations(lambda_at_infinity(level, Infinity::Negative)) -
                  sign_variations(lambda_at_infinity(level, Infinity::Positive));
    out.per_level.push_back(c);
    out.total += c;
  }
  return out;
}

}  // namespace recprs
