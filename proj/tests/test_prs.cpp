#include <doctest.h>

#include <random>

#include "cli/instances.hpp"
#include "fixtures.hpp"
#include "recprs/error.hpp"
#include "recprs/prs.hpp"

using namespace recprs;
using fixtures::desc;

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

void check_division_identities(const RecursivePrs& rprs) {
  for (int k = 1; k <= rprs.t(); ++k) {
    const Prs& L = rprs.level(k);
    for (int i = 3; i <= static_cast<int>(L.length()); ++i) {
      const PrsStep& s = L.step(i);
      REQUIRE(s.alpha != 0);
      REQUIRE(s.beta != 0);
      REQUIRE(L.element(i - 2).scaled(s.alpha) - s.quotient * L.element(i - 1) -
                  L.element(i).scaled(s.beta) ==
              Poly{});
    }
    for (int i = 2; i <= static_cast<int>(L.length()); ++i) {
      REQUIRE(L.element(i).degree() < L.element(i - 1).degree());
    }
    if (k > 1) {
      REQUIRE(L.element(1) == rprs.level(k - 1).elements.back());
      REQUIRE(L.element(2) == L.element(1).derivative());
      REQUIRE(rprs.j(k) < rprs.j(k - 1));
    }
    // The last element divides the first two exactly.
    REQUIRE(divrem(L.element(1), L.elements.back()).remainder.is_zero());
    REQUIRE(divrem(L.element(2), L.elements.back()).remainder.is_zero());
  }
  REQUIRE(rprs.complete());
}

}  // namespace

TEST_CASE("PRS of the running example's first level") {
  const Poly p = fixtures::example1_p();
  const Prs prs = compute_prs(p, p.derivative(), sturm_rule());
  const auto levels = fixtures::example1_levels();
  REQUIRE(prs.length() == 4);
  CHECK(prs.elements == levels[0]);
  CHECK_FALSE(prs.complete());
}

TEST_CASE("PRS that ends at an exact divisor") {
  const Prs prs = compute_prs(Poly{-1, 0, 1}, Poly{-1, 1}, sturm_rule());
  REQUIRE(prs.length() == 2);
  CHECK(prs.element(2) == Poly{-1, 1});
  CHECK_FALSE(prs.complete());
}

TEST_CASE("coprime PRS ends in a constant") {
  const Prs prs = compute_prs(Poly{1, 0, 1}, Poly::x(), sturm_rule());
  REQUIRE(prs.length() == 3);
  CHECK(prs.element(3) == Poly{-1});
  CHECK(prs.complete());
  CHECK(prs.n(1) == 2);
  CHECK(prs.c(3) == -1);
  CHECK(prs.d(1) == 1);
}

TEST_CASE("recursive Sturm sequence of the running example") {
  const Poly p = fixtures::example1_p();
  const RecursivePrs rprs = compute_recursive_prs(p, p.derivative(), sturm_rule());
  const auto levels = fixtures::example1_levels();
  REQUIRE(rprs.t() == 3);
  CHECK(rprs.l(1) == 4);
  CHECK(rprs.l(2) == 4);
  CHECK(rprs.l(3) == 3);
  CHECK(rprs.polynomial_count() == 11);
  for (int k = 1; k <= 3; ++k) CHECK(rprs.level(k).elements == levels[static_cast<std::size_t>(k - 1)]);
  CHECK(rprs.indices().j == std::vector<int>{8, 5, 2, 0});
  CHECK(rprs.indices().m == 8);
  CHECK(rprs.indices().n == 7);
  CHECK(rprs.complete());
  check_division_identities(rprs);
  CHECK(recursive_sturm_sequence(p).levels().size() == 3);
}

TEST_CASE("coprime input gives one level equal to the plain PRS") {
  const Poly f{1, 2, 0, 3};
  const Poly g{5, 1};
  const RecursivePrs rprs = compute_recursive_prs(f, g, sturm_rule());
  CHECK(rprs.t() == 1);
  CHECK(rprs.level(1).elements == compute_prs(f, g, sturm_rule()).elements);
}

TEST_CASE("a cube splits into three levels") {
  const Poly f = pow(Poly{-1, 1}, 3);
  const RecursivePrs rprs = compute_recursive_prs(f, f.derivative(), sturm_rule());
  REQUIRE(rprs.t() == 3);
  CHECK(proportionality(rprs.level(1).elements.back(), pow(Poly{-1, 1}, 2)).has_value());
  CHECK(proportionality(rprs.level(2).elements.back(), Poly{-1, 1}).has_value());
  CHECK(rprs.level(3).elements.back().degree() == 0);
  CHECK(rprs.l(3) == 2);
  check_division_identities(rprs);
}

TEST_CASE("built-in division rules") {
  const Poly rem{1, 2, 3};
  const StepContext at13{1, 3, rem};
  const StepContext at24{2, 4, rem};
  for (const StepContext& ctx : {at13, at24}) {
    const StepFactors f = sturm_rule()(ctx);
    CHECK(f.alpha == 1);
    CHECK(f.beta == -1);
  }
  const StepFactors m = monic_rule()(at13);
  CHECK(m.alpha == 1);
  CHECK(m.beta == 3);

  const Poly p = fixtures::example1_p();
  const RecursivePrs monic = compute_recursive_prs(p, p.derivative(), monic_rule());
  for (const Prs& L : monic.levels()) {
    for (int i = 3; i <= static_cast<int>(L.length()); ++i) CHECK(L.c(i) == 1);
  }
  CHECK(monic.indices().j == std::vector<int>{8, 5, 2, 0});
}

TEST_CASE("a rule returning a zero factor is rejected") {
  const DivisionRule bad("zero-beta", [](const StepContext&) { return StepFactors{1, 0}; });
  CHECK(kind_of([&] { (void)compute_prs(Poly{1, 0, 1}, Poly::x(), bad); }) ==
        ErrorKind::InvalidRule);
}

TEST_CASE("GCD through the PRS") {
  const Poly p = fixtures::example1_p();
  const Poly g = gcd_by_prs(p, p.derivative());
  CHECK(g == fixtures::example1_levels()[0][3]);
  const Poly x = Poly::x();
  const Poly factored = (x + Poly{2}) * pow(x - Poly{3}, 2) * pow(x + Poly{1}, 2);
  CHECK(g == factored.scaled(Rational(128, 25)));

  const Poly f{1, 2, 3};
  CHECK(proportionality(gcd_by_prs(f, f), f).has_value());
  CHECK(gcd_by_prs(Poly{1, 0, 1}, Poly::x()).degree() == 0);
}

TEST_CASE("precondition violations are typed") {
  const Poly f{1, 0, 1};
  CHECK(kind_of([&] { (void)compute_prs(f, Poly{2, 0, 1}, sturm_rule()); }) ==
        ErrorKind::DegreeOrder);
  CHECK(kind_of([&] { (void)compute_prs(f, Poly{}, sturm_rule()); }) == ErrorKind::ZeroInput);
  CHECK(kind_of([&] { (void)compute_recursive_prs(f, f, sturm_rule()); }) ==
        ErrorKind::DegreeOrder);
  CHECK(kind_of([&] { (void)compute_recursive_prs(f, Poly{3}, sturm_rule()); }) ==
        ErrorKind::DegreeOrder);
  CHECK(kind_of([&] { (void)recursive_sturm_sequence(Poly{4}); }) == ErrorKind::ConstantInput);
  CHECK(kind_of([&] { (void)recursive_sturm_sequence(Poly{}); }) == ErrorKind::ConstantInput);
}

TEST_CASE("a linear polynomial has a single complete two-element level") {
  const RecursivePrs rprs = recursive_sturm_sequence(Poly{-1, 2});
  REQUIRE(rprs.t() == 1);
  CHECK(rprs.l(1) == 2);
  CHECK(rprs.complete());
}

TEST_CASE("randomized recursive PRS invariants for both rules") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto [f, g] = cli::random_instance(rng);
    check_division_identities(compute_recursive_prs(f, g, sturm_rule()));
    check_division_identities(compute_recursive_prs(f, g, monic_rule()));
  }
}

TEST_CASE("square-free input with its derivative gives one level") {
  std::mt19937_64 rng(32);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 50; ++trial) {
    const Poly f = cli::random_poly(rng, 1 + trial % 7);
    if (f.degree() < 1) continue;
    if (gcd_by_prs(f, f.derivative()).degree() != 0) continue;  // not square-free
    ++seen;
    CHECK(recursive_sturm_sequence(f).t() == 1);
  }
  CHECK(seen >= 50);
}
