#pragma once

#include "recprs/matrix.hpp"
#include "recprs/poly.hpp"
#include "recprs/prs.hpp"

namespace recprs {

/// N^(j)(F, G) together with the degrees it was built for.
struct SubresMatrix {
  RatMatrix matrix;
  int j = 0;
  int m = 0;
  int n = 0;
};

/// (m+n) x (m+n) Sylvester matrix: n shifted columns of F then m shifted
/// columns of G, highest coefficients on top. Pre: deg f >= deg g > 0.
RatMatrix sylvester_matrix(const Poly& f, const Poly& g);

/// The (m+n-j) x (m+n-2j) j-th subresultant matrix. Pre: j < n.
SubresMatrix subres_matrix(const Poly& f, const Poly& g, int j);

/// S_j(F, G). Pre: j < n.
Poly subres_poly(const Poly& f, const Poly& g, int j);

/// Subresultant matrix for coefficient columns of declared (formal) degrees
/// m >= n, for any 0 <= j <= n. j = n yields the m x (m-n) matrix of G
/// shifts only, whose subresultant is lc(G)^(m-n-1) * G.
RatMatrix subres_layout(const CoeffVector& f, const CoeffVector& g, int j);

/// Determinant polynomial of a matrix with rows = cols + j: the coefficient
/// of x^tau is the determinant of the top cols-1 rows stacked on row
/// rows-1-tau (0-based). In 1-based terms this is "the top rows plus the
/// (rows - tau)-th row", the selection shared by all four subresultant
/// families.
Poly minor_polynomial(const RatMatrix& m, int j);

enum class FundamentalMode {
  AtNi,            // S_{n_i} = factor * P_i
  AtPrevNiMinus1,  // S_{n_{i-1}-1} = factor * P_i
};

/// Scalar relating S_{n_i}(F,G) (or S_{n_{i-1}-1}(F,G)) to P_i, evaluated
/// from the recorded alpha, beta, leading coefficients and degrees of `prs`.
/// Pre: 3 <= i <= length(prs).
Rational fundamental_theorem_factor(const Prs& prs, int i, FundamentalMode mode);

/// For i = 2 this is lc(G)^(m-n-1); for i >= 3 it equals the AtNi factor.
/// It is the constant B with S_{n_l}(P_1, P_2) = B * P_l for the last element.
Rational last_element_factor(const Prs& prs);

}  // namespace recprs
