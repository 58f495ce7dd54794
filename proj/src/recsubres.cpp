#include "recprs/recsubres.hpp"

#include <string>

#include "recprs/error.hpp"
#include "recprs/subres.hpp"

namespace recprs {

namespace {

int jk(const RecursiveIndices& idx, int k) { return idx.j.at(static_cast<std::size_t>(k)); }

int max_block_degree(const RecursiveIndices& idx, int k) {
  return k == 1 ? idx.n : jk(idx, k - 1) - 1;
}

void check_level(const RecursiveIndices& idx, int k) {
  if (k < 1 || k > idx.levels()) {
    throw Error(ErrorKind::IndexOutOfRange, "level k = " + std::to_string(k) + " outside 1.." +
                                                std::to_string(idx.levels()));
  }
}

void check_block_pair(const RecursiveIndices& idx, int k, int j) {
  check_level(idx, k);
  if (j < 0 || j > max_block_degree(idx, k)) {
    throw Error(ErrorKind::IndexOutOfRange,
                "degree j = " + std::to_string(j) + " out of range at level " + std::to_string(k));
  }
}

void require_complete(const RecursivePrs& rprs) {
  if (!rprs.complete()) {
    throw Error(ErrorKind::IncompletePrs, "recursive PRS does not end in a nonzero constant");
  }
}

// Lays out N̄^(k,j) from N̄^(k-1, jp), where jp = j_{k-1}.
RecSubresMatrix assemble_next(const RatMatrix& prev, int jp, int j, int level) {
  const std::size_t lower_h = static_cast<std::size_t>(jp) + 1;
  const RatMatrix upper = top_rows(prev, prev.rows() - lower_h);
  const RatMatrix lower = bottom_rows(prev, lower_h);
  RatMatrix lower_scaled(static_cast<std::size_t>(jp), prev.cols());
  for (std::size_t r = 0; r < static_cast<std::size_t>(jp); ++r) {
    const long mult = jp - static_cast<long>(r);
    for (std::size_t c = 0; c < prev.cols(); ++c) lower_scaled(r, c) = lower(r, c) * mult;
  }

  RecBlockLayout lay;
  lay.diagonal_blocks = 2 * jp - 2 * j - 1;
  lay.lower_blocks = jp - j - 1;
  lay.lower_scaled_blocks = jp - j;
  lay.block_rows = upper.rows();
  lay.block_cols = prev.cols();
  lay.lower_rows = static_cast<std::size_t>(2 * jp - j - 1);

  const std::size_t nb = static_cast<std::size_t>(lay.diagonal_blocks);
  RatMatrix out(nb * lay.block_rows + lay.lower_rows, nb * lay.block_cols);
  for (std::size_t d = 0; d < nb; ++d) out.place(upper, d * lay.block_rows, d * lay.block_cols);
  const std::size_t base = nb * lay.block_rows;
  // Each group starts at the top of the staircase region and steps down one
  // row per block, like the F- and G-columns of a Sylvester matrix.
  for (int i = 0; i < lay.lower_blocks; ++i) {
    out.place(lower, base + static_cast<std::size_t>(i),
              static_cast<std::size_t>(i) * lay.block_cols);
  }
  for (int i = 0; i < lay.lower_scaled_blocks; ++i) {
    out.place(lower_scaled, base + static_cast<std::size_t>(i),
              static_cast<std::size_t>(lay.lower_blocks + i) * lay.block_cols);
  }
  return {std::move(out), level, j, lay};
}

}  // namespace

int max_valid_degree(const RecursiveIndices& idx, int k) {
  check_level(idx, k);
  return k == 1 ? idx.n - 1 : jk(idx, k - 1) - 2;
}

void check_valid_pair(const RecursiveIndices& idx, int k, int j) {
  const int hi = max_valid_degree(idx, k);
  if (j < 0 || j > hi) {
    throw Error(ErrorKind::IndexOutOfRange, "(k, j) = (" + std::to_string(k) + ", " +
                                                std::to_string(j) + ") outside 0 <= j <= " +
                                                std::to_string(hi));
  }
}

namespace detail {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::IndexOutOfRange, "matrix size overflows 64 bits");
  }
  return out;
}

RecSubresMatrix build_recsubres_block(const RecursivePrs& rprs, int k, int j) {
  require_complete(rprs);
  const RecursiveIndices idx = rprs.indices();
  check_block_pair(idx, k, j);
  const int m = idx.m;
  const int n = idx.n;
  const CoeffVector fv = rprs.F().coeff_vector(m);
  const CoeffVector gv = rprs.G().coeff_vector(n);
  if (k == 1) return {subres_layout(fv, gv, j), 1, j, {}};
  RecSubresMatrix cur{subres_layout(fv, gv, jk(idx, 1)), 1, jk(idx, 1), {}};
  for (int level = 2; level <= k; ++level) {
    const int target = level == k ? j : jk(idx, level);
    cur = assemble_next(cur.matrix, jk(idx, level - 1), target, level);
  }
  return cur;
}

}  // namespace detail

MatrixSize prop1_size(const RecursiveIndices& idx, int k, int j) {
  check_block_pair(idx, k, j);
  if (k == 1) return {idx.m + idx.n - j, idx.m + idx.n - 2 * j};
  std::int64_t cols = idx.m + idx.n - 2 * jk(idx, 1);
  for (int l = 2; l <= k - 1; ++l) {
    cols = detail::checked_mul(cols, 2 * jk(idx, l - 1) - 2 * jk(idx, l) - 1);
  }
  cols = detail::checked_mul(cols, 2 * jk(idx, k - 1) - 2 * j - 1);
  return {cols + j, cols};
}

RecSubresMatrix build_recsubres_matrix(const RecursivePrs& rprs, int k, int j) {
  require_complete(rprs);
  check_valid_pair(rprs.indices(), k, j);
  return detail::build_recsubres_block(rprs, k, j);
}

Poly recsubres_poly(const RecursivePrs& rprs, int k, int j) {
  return minor_polynomial(build_recsubres_matrix(rprs, k, j).matrix, j);
}

std::int64_t ScaleLedger::u(int k, int j) const { return prop1_size(indices, k, j).cols; }

std::int64_t ScaleLedger::u(int k) const {
  if (k == 1) return indices.m + indices.n - 2 * jk(indices, 1);
  return u(k, jk(indices, k));
}

int ScaleLedger::b(int k, int j) const {
  check_block_pair(indices, k, j);
  return k == 1 ? 1 : 2 * jk(indices, k - 1) - 2 * j - 1;
}

int ScaleLedger::r(int k, int j) const {
  if (k == 1) return 1;
  const std::int64_t bb = b(k, j);
  // (-1)^{(u_{k-1}-1)(1+2+...+(b-1))}
  const std::int64_t tri = bb * (bb - 1) / 2;
  return ((u(k - 1) - 1) % 2 != 0 && tri % 2 != 0) ? -1 : 1;
}

int ScaleLedger::J(int k, int j) const {
  check_block_pair(indices, k, j);
  return k == 1 ? indices.m + indices.n - 2 * j : 2 * jk(indices, k - 1) - 2 * j - 1;
}

Rational ScaleLedger::Bhat_at(int k, int j) const {
  if (k == 1) return 1;
  const auto& d = u_det.at(static_cast<std::size_t>(k));
  if (!d) throw Error(ErrorKind::SingularU, "no |U| recorded for this level", k);
  return pow(*d, J(k, j));
}

Rational ScaleLedger::recursive_factor(int k, int j) const {
  return pow(Rbar.at(static_cast<std::size_t>(k - 1)), b(k, j)) * r(k, j);
}

Rational ScaleLedger::nested_factor(int k, int j) const {
  return pow(Rtilde.at(static_cast<std::size_t>(k - 1)), b(k, j));
}

int ScaleLedger::sign_factor(int k, int j) const {
  const int base = Rprime.at(static_cast<std::size_t>(k - 1));
  const int p = (base < 0 && b(k, j) % 2 != 0) ? -1 : 1;
  return p * r(k, j);
}

Rational ScaleLedger::reduction_factor(int k, int j) const {
  if (k == 1) return 1;
  if (!has_reduction_constants()) {
    throw Error(ErrorKind::SingularU, "reduction constants not attached");
  }
  const auto km1 = static_cast<std::size_t>(k - 1);
  return pow(Rhat.at(km1) * Bhat.at(km1), J(k, j)) * Bhat_at(k, j);
}

ScaleLedger scale_ledger(const RecursivePrs& rprs) {
  require_complete(rprs);
  ScaleLedger L;
  L.indices = rprs.indices();
  const int t = rprs.t();
  L.B.assign(static_cast<std::size_t>(t) + 1, Rational(0));
  L.Rbar.assign(static_cast<std::size_t>(t) + 1, Rational(1));
  L.Rtilde.assign(static_cast<std::size_t>(t) + 1, Rational(1));
  L.Rprime.assign(static_cast<std::size_t>(t) + 1, 1);
  for (int k = 1; k <= t; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    L.B[kk] = last_element_factor(rprs.level(k));
    const int bk = L.b(k);
    const int rk = L.r(k);
    L.Rbar[kk] = pow(L.Rbar[kk - 1], bk) * rk * L.B[kk];
    L.Rtilde[kk] = pow(L.Rtilde[kk - 1], bk) * L.B[kk];
    const int prev = (L.Rprime[kk - 1] < 0 && bk % 2 != 0) ? -1 : 1;
    L.Rprime[kk] = prev * rk;
  }
  return L;
}

}  // namespace recprs
