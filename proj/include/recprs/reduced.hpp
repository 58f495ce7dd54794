#pragma once

#include <optional>
#include <vector>

#include "recprs/matrix.hpp"
#include "recprs/prs.hpp"
#include "recprs/recsubres.hpp"

namespace recprs {

/// N̂^(k,j): nested subresultant matrix with the common factor |U^(k)|
/// divided out of every entry.
struct ReducedNestedMatrix {
  RatMatrix matrix;
  int level = 0;
  int degree = 0;
  Rational u_det;  // |U^(k)|; 1 on level 1
};

/// The data of one reduction from level k-1 to level k. The previous matrix
/// N̂^(k-1, j_{k-1}) splits as (U | v) over its bottom j_{k-1}+1 rows; the
/// bottom row for coefficient tau is row j_{k-1}-tau of that block, split
/// as (b_tau | g_tau).
struct ReductionStep {
  int level = 0;                // k
  int previous_degree = 0;      // j_{k-1}
  RatMatrix previous;           // N̂^(k-1, j_{k-1})
  RatMatrix U;
  std::vector<Rational> v;
  Rational u_det;
  std::vector<Rational> h;      // h_tau = g_tau + x_tau v with x_tau U = -b_tau
  std::size_t factorizations = 0;  // factorizations of U used for all tau
};

/// Pre: 2 <= k <= t. Throws SingularU (carrying k) if U^(k) is singular.
ReductionStep reduction_step(const RecursivePrs& rprs, int k);

/// Which bordered determinant a nonzero entry (p, q) of N̂^(k,j) stands for:
/// entry = |U| * multiplier * h_tau, so multiplier * Â_tau is the entry of
/// the unreduced matrix.
struct EntrySource {
  long multiplier = 1;
  int tau = 0;
};

/// Pre: jp = j_{k-1}, valid j. Nullopt for structural zeros.
std::optional<EntrySource> reduced_entry_source(int jp, int j, std::size_t p, std::size_t q);

/// Pre: complete recursive PRS, valid (k, j). Throws SingularU.
ReducedNestedMatrix reduced_nested_matrix(const RecursivePrs& rprs, int k, int j);

/// Ŝ_{k,j}(F, G).
Poly reduced_nested_poly(const RecursivePrs& rprs, int k, int j);

/// N̂^(k,j) cut out of N̂^(k,0): the left n_2-j columns of the first block,
/// the left n_1-j columns of the second, then the top n_1+n_2-j rows, where
/// n_1, n_2 are the formal degrees of the pair the level is built from.
ReducedNestedMatrix reduced_from_k0(const RecursivePrs& rprs, int k, int j);

/// Fills u_det, Bhat and Rhat. If some U^(k) is singular, the constants
/// below level k are still filled before SingularU is thrown.
void attach_reduction_constants(ScaleLedger& ledger, const RecursivePrs& rprs);

}  // namespace recprs
