#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "recprs/rational.hpp"

namespace recprs {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Rational> entries() const noexcept { return entries_; }

  /// Copies `block` with its top-left corner at (row, col).
  void place(const RatMatrix& block, std::size_t row, std::size_t col);

  RatMatrix transposed() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Rows 0..count-1 and all columns.
RatMatrix top_rows(const RatMatrix& m, std::size_t count);
/// The last `count` rows and all columns.
RatMatrix bottom_rows(const RatMatrix& m, std::size_t count);

/// Selected rows/columns in the given order. Selections must be strictly
/// increasing and in range (IndexOutOfRange otherwise).
RatMatrix submatrix(const RatMatrix& m, std::span<const std::size_t> row_selection,
                    std::span<const std::size_t> col_selection);

/// Determinant by single-step fraction-free Bareiss elimination. Each row is
/// first scaled to integers; pivots are chosen as the first nonzero entry
/// at or below the diagonal. Throws NonSquare.
Rational det(const RatMatrix& m);

/// Integer Bareiss determinant. Every division in the recurrence is checked
/// for exactness and InexactDivision is thrown if one ever leaves a
/// remainder (it cannot, by Sylvester's identity).
Integer bareiss_det(std::vector<Integer> entries, std::size_t n);

/// Exact LU factorization of a square matrix for solving row systems
/// x * U = rhs repeatedly against one factorization.
class RowSystemSolver {
 public:
  /// Factors `u`. Throws NonSquare, or SingularMatrix if `u` is singular.
  explicit RowSystemSolver(const RatMatrix& u);

  std::size_t order() const noexcept { return n_; }
  const Rational& determinant() const noexcept { return det_; }

  /// Returns x with x * U = rhs.
  std::vector<Rational> solve(std::span<const Rational> rhs) const;

  /// Factorizations performed by this thread so far.
  static std::size_t factorizations() noexcept;

 private:
  std::size_t n_ = 0;
  // Packed LU of P*U^T: unit lower L below the diagonal, upper part above.
  std::vector<Rational> lu_;
  std::vector<std::size_t> perm_;
  Rational det_{1};
};

/// Returns x with x * u = -b. Throws SingularMatrix if u is singular.
std::vector<Rational> solve_row_system(const RatMatrix& u, std::span<const Rational> b);

}  // namespace recprs
