#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "recprs/matrix.hpp"
#include "recprs/prs.hpp"

namespace recprs {

/// Largest j for which S̄_{k,j}, S̃_{k,j} and Ŝ_{k,j} are defined: n-1 on
/// level 1 and j_{k-1}-2 above it. Negative when the level has no valid j.
int max_valid_degree(const RecursiveIndices& idx, int k);

/// Throws IndexOutOfRange unless 1 <= k <= t and 0 <= j <= max_valid_degree.
void check_valid_pair(const RecursiveIndices& idx, int k, int j);

struct MatrixSize {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  friend bool operator==(const MatrixSize&, const MatrixSize&) = default;
};

/// Closed-form dimensions of N̄^(k,j). Besides the valid range this accepts
/// the building-block degree j_k of each level (j = n on level 1,
/// j = j_{k-1}-1 above), which the next level's layout is made from.
MatrixSize prop1_size(const RecursiveIndices& idx, int k, int j);

/// How the blocks of N̄^(k,j) for k > 1 are laid out.
struct RecBlockLayout {
  int diagonal_blocks = 0;       // copies of N̄_U^(k-1, j_{k-1})
  int lower_blocks = 0;          // copies of N̄_L^(k-1, j_{k-1})
  int lower_scaled_blocks = 0;   // copies of N̄_L'^(k-1, j_{k-1})
  std::size_t block_rows = 0;    // rows of N̄_U
  std::size_t block_cols = 0;    // columns of every block
  std::size_t lower_rows = 0;    // height of the staircase region
};

struct RecSubresMatrix {
  RatMatrix matrix;
  int level = 0;
  int degree = 0;
  RecBlockLayout layout;  // all zero for k = 1
};

/// N̄^(k,j)(F,G). Pre: complete recursive PRS, valid (k,j).
RecSubresMatrix build_recsubres_matrix(const RecursivePrs& rprs, int k, int j);

/// S̄_{k,j}(F,G).
Poly recsubres_poly(const RecursivePrs& rprs, int k, int j);

/// Exact constants relating the subresultant families. Vectors are indexed by
/// level k directly (entry 0 is the k = 0 base case or unused). Kept as plain
/// data so callers can inspect and, in tests, perturb them.
struct ScaleLedger {
  RecursiveIndices indices;
  std::vector<Rational> B;       // B_k, k = 1..t
  std::vector<Rational> Rbar;    // R̄_k, k = 0..t
  std::vector<Rational> Rtilde;  // R̃_k, k = 0..t
  std::vector<int> Rprime;       // R'_k, k = 0..t

  // Filled by attach_reduction_constants (reduced module).
  std::vector<std::optional<Rational>> u_det;  // |U^(k)|, k = 2..t
  // B̂_k = B̂_{k, j_k} and R̂_k; shorter than t+1 when some U^(k) is singular.
  std::vector<Rational> Bhat;
  std::vector<Rational> Rhat;

  int t() const noexcept { return indices.levels(); }

  std::int64_t u(int k, int j) const;
  /// u_k = u_{k, j_k}; u_1 = m + n - 2 j_1.
  std::int64_t u(int k) const;
  int b(int k, int j) const;
  int b(int k) const { return b(k, indices.j.at(static_cast<std::size_t>(k))); }
  int r(int k, int j) const;
  int r(int k) const { return r(k, indices.j.at(static_cast<std::size_t>(k))); }
  /// Columns of the reduced nested matrix: 2 j_{k-1} - 2j - 1 (m+n-2j at k = 1).
  int J(int k, int j) const;
  /// |U^(k)|^{J_{k,j}}, 1 on level 1. Needs reduction constants.
  Rational Bhat_at(int k, int j) const;
  bool has_reduction_constants() const noexcept { return !Bhat.empty(); }

  /// (R̄_{k-1})^{b_{k,j}} r_{k,j}: S̄_{k,j} over S_j(P_1^(k), P_2^(k)).
  Rational recursive_factor(int k, int j) const;
  /// (R̃_{k-1})^{b_{k,j}}: S̃_{k,j} over S_j(P_1^(k), P_2^(k)).
  Rational nested_factor(int k, int j) const;
  /// (R'_{k-1})^{b_{k,j}} r_{k,j} = ±1: S̄_{k,j} over S̃_{k,j}.
  int sign_factor(int k, int j) const;
  /// (R̂_{k-1} B̂_{k-1})^{J_{k,j}} B̂_{k,j}: S̃_{k,j} over Ŝ_{k,j}.
  Rational reduction_factor(int k, int j) const;
};

/// Pre: complete recursive PRS (IncompletePrs otherwise).
ScaleLedger scale_ledger(const RecursivePrs& rprs);

namespace detail {
/// N̄ at a building-block degree (see prop1_size); no range narrowing.
RecSubresMatrix build_recsubres_block(const RecursivePrs& rprs, int k, int j);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace recprs
