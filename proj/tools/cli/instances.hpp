#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "recprs/poly.hpp"

namespace recprs::cli {

/// Small random rational: numerator in [-bound, bound], denominator in [1, 3].
Rational random_rational(std::mt19937_64& rng, int bound = 5);

/// Random polynomial of exact degree `degree` with small rational coefficients.
Poly random_poly(std::mt19937_64& rng, int degree);

/// A pair (F, G) with 8 >= deg F > deg G >= 1 that usually has a nontrivial
/// GCD with repeated factors, so its recursive PRS has several levels. Either
/// G = F' or F and G share a product of rational linear factors.
std::pair<Poly, Poly> random_instance(std::mt19937_64& rng);
std::pair<Poly, Poly> random_instance(std::uint64_t seed);

}  // namespace recprs::cli
