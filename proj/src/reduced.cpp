#include "recprs/reduced.hpp"

#include <string>

#include "recprs/error.hpp"
#include "recprs/subres.hpp"

namespace recprs {

namespace {

void require_complete(const RecursivePrs& rprs) {
  if (!rprs.complete()) throw Error(ErrorKind::IncompletePrs, "recursive PRS is incomplete");
}

RatMatrix level_one_block(const RecursivePrs& rprs, int j) {
  const RecursiveIndices idx = rprs.indices();
  return subres_layout(rprs.F().coeff_vector(idx.m), rprs.G().coeff_vector(idx.n), j);
}

ReductionStep reduce(RatMatrix previous, int jp, int level) {
  ReductionStep step;
  step.level = level;
  step.previous_degree = jp;
  const std::size_t cols = previous.cols();
  const std::size_t upper_rows = previous.rows() - static_cast<std::size_t>(jp) - 1;
  if (upper_rows + 1 != cols) {
    throw Error(ErrorKind::IndexOutOfRange, "reduction needs rows = cols + j_{k-1}", level);
  }
  step.U = RatMatrix(upper_rows, cols - 1);
  step.v.resize(upper_rows);
  for (std::size_t r = 0; r < upper_rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) step.U(r, c) = previous(r, c);
    step.v[r] = previous(r, cols - 1);
  }

  const std::size_t before = RowSystemSolver::factorizations();
  std::optional<RowSystemSolver> solver;
  try {
    solver.emplace(step.U);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMatrix) throw;
    throw Error(ErrorKind::SingularU, "U is singular at level " + std::to_string(level), level);
  }
  step.u_det = solver->determinant();

  step.h.resize(static_cast<std::size_t>(jp) + 1);
  std::vector<Rational> rhs(cols - 1);
  for (int tau = 0; tau <= jp; ++tau) {
    const std::size_t row = upper_rows + static_cast<std::size_t>(jp - tau);
    for (std::size_t c = 0; c + 1 < cols; ++c) rhs[c] = -previous(row, c);
    const std::vector<Rational> x = solver->solve(rhs);
    Rational h = previous(row, cols - 1);
    for (std::size_t r = 0; r < upper_rows; ++r) h += x[r] * step.v[r];
    step.h[static_cast<std::size_t>(tau)] = h;
  }
  step.factorizations = RowSystemSolver::factorizations() - before;
  step.previous = std::move(previous);
  return step;
}

RatMatrix layout_from_h(const std::vector<Rational>& h, int j) {
  const int jp = static_cast<int>(h.size()) - 1;
  CoeffVector a;
  CoeffVector da;
  for (int tau = jp; tau >= 0; --tau) a.entries.push_back(h[static_cast<std::size_t>(tau)]);
  for (int tau = jp - 1; tau >= 0; --tau) {
    da.entries.push_back(h[static_cast<std::size_t>(tau) + 1] * (tau + 1));
  }
  return subres_layout(a, da, j);
}

// N̂^(k, j) for any building-block degree j (up to j_{k-1}-1 when k > 1).
ReducedNestedMatrix reduced_block(const RecursivePrs& rprs, int k, int j) {
  if (k == 1) return {level_one_block(rprs, j), 1, j, Rational(1)};
  RatMatrix cur = level_one_block(rprs, rprs.j(1));
  for (int level = 2; level <= k; ++level) {
    const ReductionStep step = reduce(std::move(cur), rprs.j(level - 1), level);
    const int target = level == k ? j : rprs.j(level);
    cur = layout_from_h(step.h, target);
    if (level == k) return {std::move(cur), k, j, step.u_det};
  }
  return {};  // unreachable
}

}  // namespace

ReductionStep reduction_step(const RecursivePrs& rprs, int k) {
  require_complete(rprs);
  if (k < 2 || k > rprs.t()) throw Error(ErrorKind::IndexOutOfRange, "reduction level out of range");
  RatMatrix previous = reduced_block(rprs, k - 1, rprs.j(k - 1)).matrix;
  return reduce(std::move(previous), rprs.j(k - 1), k);
}

std::optional<EntrySource> reduced_entry_source(int jp, int j, std::size_t p, std::size_t q) {
  const int f_cols = jp - 1 - j;
  const int g_cols = jp - j;
  const long pp = static_cast<long>(p);
  const long qq = static_cast<long>(q);
  if (qq < f_cols) {
    const long t = pp - qq;
    if (t < 0 || t > jp) return std::nullopt;
    return EntrySource{1, static_cast<int>(jp - t)};
  }
  const long qg = qq - f_cols;
  if (qg >= g_cols) return std::nullopt;
  const long t = pp - qg;
  if (t < 0 || t > jp - 1) return std::nullopt;
  const int tau = static_cast<int>(jp - t);
  return EntrySource{tau, tau};
}

ReducedNestedMatrix reduced_nested_matrix(const RecursivePrs& rprs, int k, int j) {
  require_complete(rprs);
  check_valid_pair(rprs.indices(), k, j);
  return reduced_block(rprs, k, j);
}

Poly reduced_nested_poly(const RecursivePrs& rprs, int k, int j) {
  return minor_polynomial(reduced_nested_matrix(rprs, k, j).matrix, j);
}

ReducedNestedMatrix reduced_from_k0(const RecursivePrs& rprs, int k, int j) {
  require_complete(rprs);
  check_valid_pair(rprs.indices(), k, j);
  const ReducedNestedMatrix full = reduced_nested_matrix(rprs, k, 0);
  const int n1 = k == 1 ? rprs.indices().m : rprs.j(k - 1);
  const int n2 = k == 1 ? rprs.indices().n : rprs.j(k - 1) - 1;
  std::vector<std::size_t> cols;
  for (int c = 0; c < n2 - j; ++c) cols.push_back(static_cast<std::size_t>(c));
  for (int c = 0; c < n1 - j; ++c) cols.push_back(static_cast<std::size_t>(n2 + c));
  std::vector<std::size_t> rows(static_cast<std::size_t>(n1 + n2 - j));
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
  return {submatrix(full.matrix, rows, cols), k, j, full.u_det};
}

void attach_reduction_constants(ScaleLedger& ledger, const RecursivePrs& rprs) {
  require_complete(rprs);
  const int t = rprs.t();
  std::vector<std::optional<Rational>> dets(static_cast<std::size_t>(t) + 1);
  std::optional<Error> singular;
  if (t >= 2) {
    RatMatrix cur = level_one_block(rprs, rprs.j(1));
    for (int level = 2; level <= t; ++level) {
      try {
        const ReductionStep step = reduce(std::move(cur), rprs.j(level - 1), level);
        dets[static_cast<std::size_t>(level)] = step.u_det;
        if (level < t) cur = layout_from_h(step.h, rprs.j(level));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularU) throw;
        singular = e;
        break;
      }
    }
  }
  // B̂_k and R̂_k exist for every level below the first singular one.
  const int defined = singular ? *singular->level() - 1 : t;
  ledger.u_det = std::move(dets);
  ledger.Bhat.assign(static_cast<std::size_t>(defined) + 1, Rational(1));
  ledger.Rhat.assign(static_cast<std::size_t>(defined) + 1, Rational(1));
  for (int k = 2; k <= defined; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const int jk = rprs.j(k);
    ledger.Bhat[kk] = ledger.Bhat_at(k, jk);
    ledger.Rhat[kk] = pow(ledger.Rhat[kk - 1] * ledger.Bhat[kk - 1], ledger.J(k, jk));
  }
  if (singular) throw *singular;
}

}  // namespace recprs
