#pragma once

// Shared inputs for the unit tests and the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "cli/instances.hpp"
#include "oracles.hpp"
#include "recprs/error.hpp"
#include "recprs/matrix.hpp"
#include "recprs/prs.hpp"
#include "recprs/reduced.hpp"

namespace fixtures {

using namespace recprs;

inline Poly desc(std::initializer_list<const char*> coefficients) {
  std::vector<Rational> v;
  for (const char* c : coefficients) v.push_back(parse_rational(c));
  return Poly::from_descending(std::move(v));
}

/// (x+2)^2 ((x-3)(x+1))^3
inline Poly example1_p() {
  const Poly x = Poly::x();
  return pow(x + Poly{2}, 2) * pow((x - Poly{3}) * (x + Poly{1}), 3);
}

/// The eleven polynomials of the recursive Sturm sequence of example1_p, as
/// published (levels of lengths 4, 4, 3).
inline std::vector<std::vector<Poly>> example1_levels() {
  const Poly p = example1_p();
  const Poly p4 = desc({"128/25", "-256/25", "-256/5", "1024/25", "4224/25", "2304/25"});
  const Poly q4 = desc({"12800/841", "-25600/841", "-38400/841"});
  return {
      {p, desc({"8", "-14", "-102", "80", "460", "66", "-558", "-324"}),
       desc({"75/16", "-45/16", "-60", "-225/8", "3315/16", "4815/16", "945/8"}), p4},
      {p4, desc({"128/5", "-1024/25", "-768/5", "2048/25", "4224/25"}),
       desc({"14848/625", "-1536/125", "-88576/625", "-66048/625"}), q4},
      {q4, desc({"25600/841", "-25600/841"}), desc({"51200/841"})},
  };
}

/// A pair shaped like the degree-(6, 5) worked example: F = C A, G = C B with
/// deg C = 4, deg A = 2, deg B = 1 and A, B coprime, so prs(F, G) is
/// (F, G, P_3) with deg P_3 = 4. When `singular` is set, B = x + p for
/// A = x^2 + p x + q, which makes (a6, a5) and (b5, b4) proportional.
inline std::pair<Poly, Poly> degree_6_5_instance(std::mt19937_64& rng, bool singular = false) {
  for (;;) {
    const Poly c = cli::random_poly(rng, 4);
    Poly a = cli::random_poly(rng, 2);
    Poly b = cli::random_poly(rng, 1);
    if (singular) {
      const Rational p = oracle::small_rational(rng);
      const Rational q = oracle::small_rational(rng);
      if (q == 0) continue;
      a = Poly{q, p, 1};
      b = Poly{p, 1};
    }
    // Coprime iff A does not vanish at the root of B.
    if (a.evaluate(-b.coeff(0) / b.coeff(1)) == 0) continue;
    const Poly f = c * a;
    const Poly g = c * b;
    const Rational det_u = f.coeff(6) * g.coeff(4) - f.coeff(5) * g.coeff(5);
    if ((det_u == 0) != singular) continue;
    return {f, g};
  }
}

/// Randomized instances with several levels, from a fixed seed.
inline std::vector<std::pair<Poly, Poly>> random_instances(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Poly, Poly>> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(cli::random_instance(rng));
  return out;
}

/// Checks H_{p,q} = |U| h_{p,q} for every entry of N̂^(k,j), computing each
/// H_{p,q} as the determinant of the bordered matrix (N̂_U ; c * bottom row).
/// Structural zeros of N̂ must be zero. Returns the number of entries checked
/// or -1 on a mismatch.
inline long check_bordered_entries(const RecursivePrs& rprs, int k, int j) {
  const ReductionStep step = reduction_step(rprs, k);
  const ReducedNestedMatrix red = reduced_nested_matrix(rprs, k, j);
  const int jp = step.previous_degree;
  const std::size_t upper = step.previous.rows() - static_cast<std::size_t>(jp) - 1;
  const std::size_t cols = step.previous.cols();
  long checked = 0;
  for (std::size_t p = 0; p < red.matrix.rows(); ++p) {
    for (std::size_t q = 0; q < red.matrix.cols(); ++q) {
      const auto src = reduced_entry_source(jp, j, p, q);
      if (!src) {
        if (red.matrix(p, q) != 0) return -1;
        continue;
      }
      RatMatrix bordered(cols, cols);
      for (std::size_t r = 0; r < upper; ++r) {
        for (std::size_t c = 0; c < cols; ++c) bordered(r, c) = step.previous(r, c);
      }
      const std::size_t bottom = upper + static_cast<std::size_t>(jp - src->tau);
      for (std::size_t c = 0; c < cols; ++c) {
        bordered(upper, c) = step.previous(bottom, c) * src->multiplier;
      }
      const Rational h_big = det(bordered);
      if (h_big != step.u_det * red.matrix(p, q)) return -1;
      ++checked;
    }
  }
  return checked;
}

}  // namespace fixtures
