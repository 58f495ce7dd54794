#include "recprs/subres.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "recprs/error.hpp"

namespace recprs {

RatMatrix subres_layout(const CoeffVector& f, const CoeffVector& g, int j) {
  const int m = f.declared_degree();
  const int n = g.declared_degree();
  if (m < n || n < 0) throw Error(ErrorKind::DegreeOrder, "subresultant layout needs m >= n");
  if (j < 0 || j > n) throw Error(ErrorKind::JOutOfRange, "j out of range");
  const int f_cols = n - j;
  const int g_cols = m - j;
  RatMatrix out(static_cast<std::size_t>(m + n - j), static_cast<std::size_t>(f_cols + g_cols));
  for (int c = 0; c < f_cols; ++c) {
    for (int t = 0; t <= m; ++t) out(static_cast<std::size_t>(c + t), static_cast<std::size_t>(c)) = f.entries[static_cast<std::size_t>(t)];
  }
  for (int c = 0; c < g_cols; ++c) {
    for (int t = 0; t <= n; ++t) {
      out(static_cast<std::size_t>(c + t), static_cast<std::size_t>(f_cols + c)) = g.entries[static_cast<std::size_t>(t)];
    }
  }
  return out;
}

RatMatrix sylvester_matrix(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero() || f.degree() < g.degree() || g.degree() < 1) {
    throw Error(ErrorKind::DegreeOrder, "Sylvester matrix needs deg F >= deg G > 0");
  }
  const int m = f.degree().value();
  const int n = g.degree().value();
  return subres_layout(f.coeff_vector(m), g.coeff_vector(n), 0);
}

SubresMatrix subres_matrix(const Poly& f, const Poly& g, int j) {
  if (f.is_zero() || g.is_zero() || f.degree() < g.degree() || g.degree() < 1) {
    throw Error(ErrorKind::DegreeOrder, "subresultant matrix needs deg F >= deg G > 0");
  }
  const int m = f.degree().value();
  const int n = g.degree().value();
  if (j < 0 || j >= n) {
    throw Error(ErrorKind::JOutOfRange,
                "j = " + std::to_string(j) + " outside 0 <= j < " + std::to_string(n));
  }
  return {subres_layout(f.coeff_vector(m), g.coeff_vector(n), j), j, m, n};
}

Poly subres_poly(const Poly& f, const Poly& g, int j) {
  return minor_polynomial(subres_matrix(f, g, j).matrix, j);
}

Poly minor_polynomial(const RatMatrix& m, int j) {
  if (j < 0 || m.rows() != m.cols() + static_cast<std::size_t>(j) || m.cols() == 0) {
    throw Error(ErrorKind::IndexOutOfRange, "minor_polynomial: need rows = cols + j");
  }
  const std::size_t top = m.cols() - 1;
  std::vector<std::size_t> rows(top + 1);
  std::iota(rows.begin(), rows.end() - 1, std::size_t{0});
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  std::vector<Rational> coeffs(static_cast<std::size_t>(j) + 1);
  for (int tau = 0; tau <= j; ++tau) {
    rows.back() = m.rows() - 1 - static_cast<std::size_t>(tau);
    coeffs[static_cast<std::size_t>(tau)] = det(submatrix(m, rows, cols));
  }
  return Poly(std::move(coeffs));
}

Rational fundamental_theorem_factor(const Prs& prs, int i, FundamentalMode mode) {
  if (i < 3 || static_cast<std::size_t>(i) > prs.length()) {
    throw Error(ErrorKind::IndexOutOfRange, "PRS index i out of range");
  }
  // Target degree s: n_i, or n_{i-1} - 1.
  const int s = mode == FundamentalMode::AtNi ? prs.n(i) : prs.n(i - 1) - 1;
  Rational factor = mode == FundamentalMode::AtNi ? pow(prs.c(i), prs.d(i - 1) - 1)
                                                  : pow(prs.c(i - 1), 1 - prs.d(i - 1));
  for (int l = 3; l <= i; ++l) {
    const PrsStep& st = prs.step(l);
    factor *= pow(st.beta / st.alpha, prs.n(l - 1) - s);
    factor *= pow(prs.c(l - 1), prs.d(l - 2) + prs.d(l - 1));
    if (((prs.n(l - 2) - s) * (prs.n(l - 1) - s)) % 2 != 0) factor = -factor;
  }
  return factor;
}

Rational last_element_factor(const Prs& prs) {
  const int l = static_cast<int>(prs.length());
  if (l == 2) return pow(prs.c(2), prs.d(1) - 1);
  return fundamental_theorem_factor(prs, l, FundamentalMode::AtNi);
}

}  // namespace recprs
