#pragma once

#include <string>

#include "recprs/matrix.hpp"
#include "recprs/prs.hpp"

namespace recprs {

/// Ñ^(k,j): the subresultant matrix of (S̃_{k-1, j_{k-1}}, its derivative),
/// taken with formal degrees j_{k-1} and j_{k-1}-1. On level 1 it is
/// N^(j)(F, G).
struct NestedSubresMatrix {
  RatMatrix matrix;
  int level = 0;
  int degree = 0;
  std::string provenance;  // which pair of polynomials the columns come from
};

/// Pre: complete recursive PRS, valid (k, j).
NestedSubresMatrix nested_matrix(const RecursivePrs& rprs, int k, int j);

/// S̃_{k,j}(F, G).
Poly nested_subres_poly(const RecursivePrs& rprs, int k, int j);

/// S̃_{k, j_k}, the polynomial the next level is built from. For the last
/// level this is a constant.
Poly nested_level_poly(const RecursivePrs& rprs, int k);

}  // namespace recprs
