#include "recprs/nested.hpp"

#include "recprs/error.hpp"
#include "recprs/recsubres.hpp"
#include "recprs/subres.hpp"

namespace recprs {

namespace {

RatMatrix nested_layout(const RecursivePrs& rprs, const Poly& base, int k, int j) {
  const int jp = rprs.j(k - 1);
  return subres_layout(base.coeff_vector(jp), base.derivative().coeff_vector(jp - 1), j);
}

Poly level_poly(const RecursivePrs& rprs, int k) {
  const RecursiveIndices idx = rprs.indices();
  const int j1 = rprs.j(1);
  Poly cur = minor_polynomial(
      subres_layout(rprs.F().coeff_vector(idx.m), rprs.G().coeff_vector(idx.n), j1), j1);
  for (int level = 2; level <= k; ++level) {
    const int jl = rprs.j(level);
    cur = minor_polynomial(nested_layout(rprs, cur, level, jl), jl);
  }
  return cur;
}

}  // namespace

Poly nested_level_poly(const RecursivePrs& rprs, int k) {
  if (!rprs.complete()) throw Error(ErrorKind::IncompletePrs, "recursive PRS is incomplete");
  if (k < 1 || k > rprs.t()) throw Error(ErrorKind::IndexOutOfRange, "level out of range");
  return level_poly(rprs, k);
}

NestedSubresMatrix nested_matrix(const RecursivePrs& rprs, int k, int j) {
  if (!rprs.complete()) throw Error(ErrorKind::IncompletePrs, "recursive PRS is incomplete");
  check_valid_pair(rprs.indices(), k, j);
  if (k == 1) {
    return {subres_matrix(rprs.F(), rprs.G(), j).matrix, 1, j, "subresultant matrix of (F, G)"};
  }
  const Poly base = level_poly(rprs, k - 1);
  return {nested_layout(rprs, base, k, j), k, j,
          "subresultant matrix of the level-" + std::to_string(k - 1) +
              " nested polynomial and its derivative"};
}

Poly nested_subres_poly(const RecursivePrs& rprs, int k, int j) {
  return minor_polynomial(nested_matrix(rprs, k, j).matrix, j);
}

}  // namespace recprs
