#include "instances.hpp"

namespace recprs::cli {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, int bound) {
  Rational q(uniform(rng, -bound, bound), uniform(rng, 1, 3));
  q.canonicalize();
  return q;
}

Poly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> a(static_cast<std::size_t>(degree) + 1);
  for (auto& c : a) c = random_rational(rng);
  while (sgn(a.back()) == 0) a.back() = random_rational(rng);
  return Poly(std::move(a));
}

std::pair<Poly, Poly> random_instance(std::mt19937_64& rng) {
  for (;;) {
    // Common part: distinct rational roots with multiplicities.
    Poly common{1};
    const int roots = uniform(rng, 1, 3);
    for (int r = 0; r < roots; ++r) {
      Rational root(uniform(rng, -4, 4), uniform(rng, 1, 2));
      root.canonicalize();
      const Poly lin = Poly::x() - Poly::constant(root);
      common *= pow(lin, static_cast<unsigned>(uniform(rng, 1, 3)));
    }
    if (common.degree() > 6) continue;
    const int cd = common.degree().value();
    if (uniform(rng, 0, 1) == 0) {
      const int extra = uniform(rng, 0, 8 - cd);
      Poly f = common * (extra > 0 ? random_poly(rng, extra) : Poly{1});
      f = f.scaled(random_rational(rng, 3) + 4);
      if (f.degree() < 2) continue;
      return {f, f.derivative()};
    }
    const int fa = uniform(rng, 1, 8 - cd);
    const int ga = uniform(rng, 0, fa - 1);
    if (cd + ga < 1) continue;
    return {common * random_poly(rng, fa), common * random_poly(rng, ga)};
  }
}

std::pair<Poly, Poly> random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_instance(rng);
}

}  // namespace recprs::cli
