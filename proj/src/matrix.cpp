#include "recprs/matrix.hpp"

#include <string>
#include <utility>

#include "recprs/error.hpp"

namespace recprs {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::IndexOutOfRange, "ragged matrix initializer");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RatMatrix::place(const RatMatrix& block, std::size_t row, std::size_t col) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_) {
    throw Error(ErrorKind::IndexOutOfRange, "block does not fit");
  }
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) {
      (*this)(row + r, col + c) = block(r, c);
    }
  }
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RatMatrix top_rows(const RatMatrix& m, std::size_t count) {
  if (count > m.rows()) throw Error(ErrorKind::IndexOutOfRange, "top_rows: too many rows");
  RatMatrix out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

RatMatrix bottom_rows(const RatMatrix& m, std::size_t count) {
  if (count > m.rows()) throw Error(ErrorKind::IndexOutOfRange, "bottom_rows: too many rows");
  RatMatrix out(count, m.cols());
  const std::size_t first = m.rows() - count;
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(first + r, c);
  }
  return out;
}

namespace {

void check_selection(std::span<const std::size_t> sel, std::size_t bound, const char* what) {
  for (std::size_t i = 0; i < sel.size(); ++i) {
    if (sel[i] >= bound) {
      throw Error(ErrorKind::IndexOutOfRange,
                  std::string("submatrix: ") + what + " index " + std::to_string(sel[i]) +
                      " out of range");
    }
    if (i > 0 && sel[i] <= sel[i - 1]) {
      throw Error(ErrorKind::IndexOutOfRange,
                  std::string("submatrix: ") + what + " selection not strictly increasing");
    }
  }
}

}  // namespace

RatMatrix submatrix(const RatMatrix& m, std::span<const std::size_t> row_selection,
                    std::span<const std::size_t> col_selection) {
  check_selection(row_selection, m.rows(), "row");
  check_selection(col_selection, m.cols(), "column");
  RatMatrix out(row_selection.size(), col_selection.size());
  for (std::size_t r = 0; r < row_selection.size(); ++r) {
    for (std::size_t c = 0; c < col_selection.size(); ++c) {
      out(r, c) = m(row_selection[r], col_selection[c]);
    }
  }
  return out;
}

Integer bareiss_det(std::vector<Integer> a, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    const Integer& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = at(i, j);
        x = x * pivot - at(i, k) * at(k, j);
        if (!mpz_divisible_p(x.get_mpz_t(), prev.get_mpz_t())) {
          throw Error(ErrorKind::InexactDivision, "Bareiss step left a remainder");
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  Integer out = at(n - 1, n - 1);
  if (sign < 0) out = -out;
  return out;
}

Rational det(const RatMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NonSquare, "det: matrix is " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  std::vector<Integer> ints(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& x = m(r, c);
      Integer& out = ints[r * n + c];
      mpz_divexact(out.get_mpz_t(), row_lcm.get_mpz_t(), x.get_den_mpz_t());
      out *= x.get_num();
    }
    scale *= row_lcm;
  }
  return make_rational(bareiss_det(std::move(ints), n), scale);
}

namespace {
thread_local std::size_t factorization_counter = 0;
}  // namespace

std::size_t RowSystemSolver::factorizations() noexcept { return factorization_counter; }

RowSystemSolver::RowSystemSolver(const RatMatrix& u) : n_(u.rows()) {
  if (!u.is_square()) throw Error(ErrorKind::NonSquare, "RowSystemSolver: matrix not square");
  ++factorization_counter;
  // x U = rhs  <=>  U^T x^T = rhs^T; factor A = U^T with row pivoting.
  lu_.resize(n_ * n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) lu_[r * n_ + c] = u(c, r);
  }
  perm_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return lu_[r * n_ + c]; };
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t p = k;
    while (p < n_ && at(p, k) == 0) ++p;
    if (p == n_) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    if (p != k) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(at(k, c), at(p, c));
      std::swap(perm_[k], perm_[p]);
      det_ = -det_;
    }
    det_ *= at(k, k);
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (at(i, k) == 0) continue;
      at(i, k) /= at(k, k);
      for (std::size_t j = k + 1; j < n_; ++j) at(i, j) -= at(i, k) * at(k, j);
    }
  }
}

std::vector<Rational> RowSystemSolver::solve(std::span<const Rational> rhs) const {
  if (rhs.size() != n_) {
    throw Error(ErrorKind::IndexOutOfRange, "solve: right-hand side has wrong length");
  }
  auto at = [&](std::size_t r, std::size_t c) -> const Rational& { return lu_[r * n_ + c]; };
  std::vector<Rational> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    y[i] = rhs[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) y[i] -= at(i, j) * y[j];
  }
  for (std::size_t i = n_; i-- > 0;) {
    for (std::size_t j = i + 1; j < n_; ++j) y[i] -= at(i, j) * y[j];
    y[i] /= at(i, i);
  }
  return y;
}

std::vector<Rational> solve_row_system(const RatMatrix& u, std::span<const Rational> b) {
  if (b.size() != u.rows()) {
    throw Error(ErrorKind::IndexOutOfRange, "solve_row_system: length mismatch");
  }
  std::vector<Rational> rhs(b.begin(), b.end());
  for (auto& x : rhs) x = -x;
  return RowSystemSolver(u).solve(rhs);
}

}  // namespace recprs
