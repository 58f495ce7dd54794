#pragma once

#include <span>
#include <vector>

#include "recprs/prs.hpp"

namespace recprs {

/// A sequence of nonzero rationals; construction throws ZeroPolynomial on a
/// zero entry.
class SignSequence {
 public:
  SignSequence() = default;
  explicit SignSequence(std::vector<Rational> values);
  const std::vector<Rational>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

enum class Infinity { Negative, Positive };

/// Values of the level's elements at ±infinity, represented by their leading
/// coefficients (times (-1)^degree at -infinity).
SignSequence lambda_at_infinity(const Prs& level, Infinity end);

/// Adjacent sign changes. Throws EmptySequence.
int sign_variations(const SignSequence& s);

struct RootCount {
  int total = 0;
  std::vector<int> per_level;  // V(-inf) - V(+inf) for each level
};

/// Real roots of p counted with multiplicity, from the recursive Sturm
/// sequence of (p, p'). Throws ConstantInput for constant or zero p.
RootCount count_real_roots_with_multiplicity(const Poly& p);

}  // namespace recprs
