#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "recprs/error.hpp"
#include "recprs/matrix.hpp"
#include "recprs/subres.hpp"

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

}  // namespace

TEST_CASE("rationals are stored in lowest terms with a positive denominator") {
  const Rational q = parse_rational("-6/4");
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK(parse_rational("+12") == 12);
  CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
  CHECK(make_rational(10, -4) == Rational(-5, 2));
  CHECK(to_string(Rational(-5, 2)) == "-5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational powers allow negative exponents of nonzero bases") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(-1), 7) == -1);
  CHECK(pow(Rational(5), 0) == 1);
}

TEST_CASE("determinant of small matrices") {
  CHECK(det(RatMatrix(0, 0)) == 1);
  CHECK(det(RatMatrix{{Rational(7, 3)}}) == Rational(7, 3));
  CHECK(det(RatMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(kind_of([] { (void)det(RatMatrix(2, 3)); }) == ErrorKind::NonSquare);
}

TEST_CASE("bordered 3x3 minor of the degree-(6,5) example matches the permutation expansion") {
  // a_i = i + 1, b_i = i + 2; rows (a6 b5 0), (a5 b4 b5), (aj b(j-1) bj).
  const auto a = [](int i) { return Rational(i + 1); };
  const auto b = [](int i) { return i < 0 ? Rational(0) : Rational(i + 2); };
  for (int j = 0; j <= 4; ++j) {
    const RatMatrix m{{a(6), b(5), 0}, {a(5), b(4), b(5)}, {a(j), b(j - 1), b(j)}};
    CHECK(det(m) == oracle::permutation_det(m));
  }
}

TEST_CASE("determinant agrees with the permutation expansion on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 6);
    const RatMatrix m = oracle::random_matrix(rng, n, n);
    REQUIRE(det(m) == oracle::permutation_det(m));
  }
}

TEST_CASE("determinant is alternating and vanishes on a repeated row") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    RatMatrix m = oracle::random_matrix(rng, n, n);
    RatMatrix swapped = m;
    for (std::size_t c = 0; c < n; ++c) std::swap(swapped(0, c), swapped(n - 1, c));
    CHECK(det(swapped) == -det(m));
    for (std::size_t c = 0; c < n; ++c) m(1, c) = m(0, c);
    CHECK(det(m) == 0);
  }
}

TEST_CASE("integer Bareiss divisions are exact up to order 8") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    const RatMatrix m = oracle::random_integer_matrix(rng, n, 20);
    std::vector<Integer> entries;
    for (const auto& e : m.entries()) entries.push_back(e.get_num());
    Integer d;
    REQUIRE_NOTHROW(d = bareiss_det(entries, n));
    if (n <= 6) {
      REQUIRE(Rational(d) == oracle::permutation_det(m));
    } else {
      // Cross-check against the LU route, a different elimination.
      try {
        REQUIRE(Rational(d) == RowSystemSolver(m).determinant());
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::SingularMatrix);
        REQUIRE(d == 0);
      }
    }
  }
}

TEST_CASE("Bareiss handles zero pivots by row search") {
  const RatMatrix m{{0, 1, 2}, {3, 0, 1}, {4, 5, 0}};
  CHECK(det(m) == oracle::permutation_det(m));
  const RatMatrix z{{0, 0}, {0, 5}};
  CHECK(det(z) == 0);
}

TEST_CASE("submatrix extraction") {
  const RatMatrix id = RatMatrix::identity(3);
  const std::vector<std::size_t> two{0, 1};
  CHECK(submatrix(id, two, two) == RatMatrix::identity(2));

  std::mt19937_64 rng(14);
  const RatMatrix any = oracle::random_matrix(rng, 4, 4);
  const std::vector<std::size_t> all{0, 1, 2, 3};
  CHECK(submatrix(any, all, all) == any);

  const std::vector<std::size_t> repeated{1, 1};
  const std::vector<std::size_t> out_of_range{0, 4};
  CHECK(kind_of([&] { (void)submatrix(any, repeated, all); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { (void)submatrix(any, all, out_of_range); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("the upper part of the (1,5) matrix of the running example is its top four rows") {
  const Poly p = fixtures::example1_p();
  const RatMatrix n15 = subres_matrix(p, p.derivative(), 5).matrix;
  REQUIRE(n15.rows() == 10);
  REQUIRE(n15.cols() == 5);
  const std::vector<std::size_t> rows{0, 1, 2, 3};
  const std::vector<std::size_t> cols{0, 1, 2, 3, 4};
  const RatMatrix upper = submatrix(n15, rows, cols);
  CHECK(upper == top_rows(n15, 4));
  CHECK(upper.rows() == 4);
  CHECK(upper(0, 0) == 1);
  CHECK(upper(0, 2) == 8);
  CHECK(upper(3, 4) == -14);
  CHECK(upper(3, 0) == 16);
}

TEST_CASE("row systems x U = -b") {
  const std::vector<Rational> b{3, 5};
  CHECK(solve_row_system(RatMatrix::identity(2), b) == std::vector<Rational>{-3, -5});

  // a6 x + a5 y = -a4, b5 x + b4 y = -b3 with U = identity: (x, y) = (-a4, -b3).
  const RatMatrix u{{1, 0}, {0, 1}};  // rows (a6, b5), (a5, b4)
  const std::vector<Rational> rhs{7, 9};
  CHECK(solve_row_system(u, rhs) == std::vector<Rational>{-7, -9});

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const RatMatrix m = oracle::random_matrix(rng, 4, 4);
    std::vector<Rational> v(4);
    for (auto& e : v) e = oracle::small_rational(rng);
    if (oracle::permutation_det(m) == 0) {
      CHECK(kind_of([&] { (void)solve_row_system(m, v); }) == ErrorKind::SingularMatrix);
      continue;
    }
    const std::vector<Rational> x = solve_row_system(m, v);
    for (std::size_t c = 0; c < 4; ++c) {
      Rational acc = v[c];
      for (std::size_t r = 0; r < 4; ++r) acc += x[r] * m(r, c);
      REQUIRE(acc == 0);
    }
  }
}

TEST_CASE("one factorization serves many right-hand sides") {
  std::mt19937_64 rng(16);
  RatMatrix m;
  do {
    m = oracle::random_matrix(rng, 5, 5);
  } while (oracle::permutation_det(m) == 0);
  const std::size_t before = RowSystemSolver::factorizations();
  const RowSystemSolver solver(m);
  CHECK(solver.determinant() == oracle::permutation_det(m));
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> rhs(5);
    for (auto& e : rhs) e = oracle::small_rational(rng);
    (void)solver.solve(rhs);
  }
  CHECK(RowSystemSolver::factorizations() - before == 1);
  CHECK(kind_of([] { RowSystemSolver s(RatMatrix(2, 3)); }) == ErrorKind::NonSquare);
}
