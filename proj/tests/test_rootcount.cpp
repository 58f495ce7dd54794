#include <doctest.h>

#include <random>

#include "cli/instances.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "recprs/error.hpp"
#include "recprs/rootcount.hpp"

using namespace recprs;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no recprs::Error thrown");
  return ErrorKind::NonSquare;
}

RecursivePrs example1() { return recursive_sturm_sequence(fixtures::example1_p()); }

int total_multiplicity(const std::map<Rational, int>& roots) {
  int n = 0;
  for (const auto& [r, m] : roots) n += m;
  return n;
}

}  // namespace

TEST_CASE("values at infinity for the running example") {
  const RecursivePrs rprs = example1();
  CHECK(lambda_at_infinity(rprs.level(1), Infinity::Positive).values() ==
        std::vector<Rational>{1, 8, Rational(75, 16), Rational(128, 25)});
  CHECK(lambda_at_infinity(rprs.level(3), Infinity::Negative).values() ==
        std::vector<Rational>{Rational(12800, 841), Rational(-25600, 841), Rational(51200, 841)});
  // The third entry of the second level is the polynomial's own leading coefficient.
  CHECK(lambda_at_infinity(rprs.level(2), Infinity::Positive).values()[2] == Rational(14848, 625));
  // A constant entry does not change sign between the two ends.
  const Rational last_plus = lambda_at_infinity(rprs.level(3), Infinity::Positive).values()[2];
  const Rational last_minus = lambda_at_infinity(rprs.level(3), Infinity::Negative).values()[2];
  CHECK(last_plus == last_minus);
}

TEST_CASE("sign variations") {
  const std::vector<Rational> plus{1, 8, Rational(75, 16), Rational(128, 25)};
  const std::vector<Rational> minus{1, -8, Rational(75, 16), Rational(-128, 25)};
  CHECK(sign_variations(SignSequence(plus)) == 0);
  CHECK(sign_variations(SignSequence(minus)) == oracle::sign_changes(minus));
  CHECK(sign_variations(SignSequence({Rational(-3)})) == 0);
  CHECK(kind_of([] { (void)sign_variations(SignSequence()); }) == ErrorKind::EmptySequence);
  CHECK_THROWS_AS(SignSequence({1, 0, 2}), Error);
}

TEST_CASE("root counts of small examples") {
  const RootCount rc = count_real_roots_with_multiplicity(fixtures::example1_p());
  CHECK(rc.total == 8);
  CHECK(rc.per_level == std::vector<int>{3, 3, 2});
  CHECK(count_real_roots_with_multiplicity(Poly{1, 0, 1}).total == 0);
  const Poly sq = pow(Poly{-1, 1}, 2);
  CHECK(count_real_roots_with_multiplicity(sq).total ==
        total_multiplicity(oracle::rational_roots(sq)));
  CHECK(total_multiplicity(oracle::rational_roots(sq)) == 2);
  CHECK(count_real_roots_with_multiplicity(Poly{3, 2}).total == 1);
  CHECK(kind_of([] { (void)count_real_roots_with_multiplicity(Poly{5}); }) ==
        ErrorKind::ConstantInput);
}

TEST_CASE("randomized products of rational linear factors") {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<int> nroots(1, 4);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p{1};
    int expected = 0;
    std::map<Rational, int> want;
    const int r = nroots(rng);
    for (int i = 0; i < r; ++i) {
      Rational root(num(rng), den(rng));
      root.canonicalize();
      const int m = mult(rng);
      if (expected + m > 10) break;
      p *= pow(Poly::x() - Poly::constant(root), static_cast<unsigned>(m));
      want[root] += m;
      expected += m;
    }
    if (expected == 0) continue;
    // Optionally multiply by a factor without real roots.
    if (trial % 3 == 0 && expected <= 8) p *= Poly{2, 1, 1};
    REQUIRE(count_real_roots_with_multiplicity(p).total == expected);
    REQUIRE(count_real_roots_with_multiplicity(p.scaled(Rational(7, 2))).total == expected);
    if (trial % 3 != 0) REQUIRE(oracle::rational_roots(p) == want);
  }
}

TEST_CASE("square-free inputs agree with the classical Sturm count") {
  std::mt19937_64 rng(82);
  int seen = 0;
  for (int trial = 0; trial < 300 && seen < 60; ++trial) {
    const Poly p = cli::random_poly(rng, 1 + trial % 8);
    if (p.degree() < 1 || gcd_by_prs(p, p.derivative()).degree() != 0) continue;
    ++seen;
    const Prs classic = compute_prs(p, p.derivative(), sturm_rule());
    const int expect = sign_variations(lambda_at_infinity(classic, Infinity::Negative)) -
                       sign_variations(lambda_at_infinity(classic, Infinity::Positive));
    const RootCount rc = count_real_roots_with_multiplicity(p);
    CHECK(rc.total == expect);
    CHECK(rc.per_level.size() == 1);
  }
  CHECK(seen >= 60);
}
