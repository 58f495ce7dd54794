#include "verify.hpp"

#include <algorithm>

#include "polytext.hpp"
#include "recprs/error.hpp"
#include "recprs/nested.hpp"
#include "recprs/reduced.hpp"
#include "recprs/subres.hpp"

namespace recprs::cli {

namespace {

void add(VerifyReport& rep, std::string identity, int k, int j, int i, bool ok,
         std::string detail = {}) {
  rep.checks.push_back({std::move(identity), k, j, i, ok, std::move(detail)});
}

// Subresultant/PRS correspondence on one level: zero ranges and both product formulas.
void check_fundamental(VerifyReport& rep, const RecursivePrs& rprs, int k) {
  const Prs& L = rprs.level(k);
  const Poly& f = L.element(1);
  const Poly& g = L.element(2);
  const int n = L.n(2);
  const int l = static_cast<int>(L.length());
  std::vector<int> zero_js;
  for (int j = 0; j < L.n(l) && j < n; ++j) zero_js.push_back(j);
  for (int i = 3; i <= l; ++i) {
    const Poly& Pi = L.element(i);
    const Poly at_ni = subres_poly(f, g, L.n(i));
    add(rep, "fundamental-at-n_i", k, L.n(i), i,
        at_ni == Pi.scaled(fundamental_theorem_factor(L, i, FundamentalMode::AtNi)));
    const int s = L.n(i - 1) - 1;
    if (s < n) {
      const Poly at_prev = subres_poly(f, g, s);
      add(rep, "fundamental-at-n_{i-1}-1", k, s, i,
          at_prev == Pi.scaled(fundamental_theorem_factor(L, i, FundamentalMode::AtPrevNiMinus1)));
    }
    for (int j = L.n(i) + 1; j < L.n(i - 1) - 1 && j < n; ++j) zero_js.push_back(j);
  }
  for (int j : zero_js) add(rep, "fundamental-zero", k, j, 0, subres_poly(f, g, j).is_zero());
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

VerifyReport verify_identities(const RecursivePrs& rprs, const LedgerHook& hook) {
  VerifyReport rep;
  rep.ledger = scale_ledger(rprs);
  try {
    attach_reduction_constants(rep.ledger, rprs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularU) throw;
    rep.singular_level = e.level();
  }
  if (hook) hook(rep.ledger);
  const ScaleLedger& L = rep.ledger;
  const RecursiveIndices idx = rprs.indices();

  for (int k = 1; k <= rprs.t(); ++k) {
    check_fundamental(rep, rprs, k);
    const Prs& level = rprs.level(k);
    const int hi = max_valid_degree(idx, k);
    for (int j = 0; j <= hi; ++j) {
      const RecSubresMatrix rm = build_recsubres_matrix(rprs, k, j);
      const MatrixSize expect = prop1_size(idx, k, j);
      add(rep, "recursive-matrix-size", k, j, 0,
          static_cast<std::int64_t>(rm.matrix.rows()) == expect.rows &&
              static_cast<std::int64_t>(rm.matrix.cols()) == expect.cols,
          std::to_string(rm.matrix.rows()) + "x" + std::to_string(rm.matrix.cols()));

      const Poly sbar = minor_polynomial(rm.matrix, j);
      const Poly classic = subres_poly(level.element(1), level.element(2), j);
      const Poly stilde = nested_subres_poly(rprs, k, j);
      add(rep, "recursive-vs-classical", k, j, 0,
          sbar == classic.scaled(L.recursive_factor(k, j)));
      add(rep, "nested-vs-classical", k, j, 0, stilde == classic.scaled(L.nested_factor(k, j)));
      add(rep, "recursive-vs-nested", k, j, 0,
          sbar == stilde.scaled(Rational(L.sign_factor(k, j))));

      for (int i = 3; i <= static_cast<int>(level.length()); ++i) {
        if (level.n(i) == j) {
          add(rep, "recursive-at-n_i", k, j, i,
              sbar == level.element(i).scaled(
                          L.recursive_factor(k, j) *
                          fundamental_theorem_factor(level, i, FundamentalMode::AtNi)));
        }
        if (level.n(i - 1) - 1 == j) {
          add(rep, "recursive-at-n_{i-1}-1", k, j, i,
              sbar == level.element(i).scaled(
                          L.recursive_factor(k, j) *
                          fundamental_theorem_factor(level, i, FundamentalMode::AtPrevNiMinus1)));
        }
      }

      if (rep.singular_level && k >= *rep.singular_level) continue;
      const ReducedNestedMatrix red = reduced_nested_matrix(rprs, k, j);
      const Poly shat = minor_polynomial(red.matrix, j);
      add(rep, "nested-vs-reduced", k, j, 0, stilde == shat.scaled(L.reduction_factor(k, j)));
      add(rep, "reduced-from-k0", k, j, 0, reduced_from_k0(rprs, k, j).matrix == red.matrix);
    }
  }
  return rep;
}

nlohmann::json to_json(const ScaleLedger& L) {
  nlohmann::json out;
  const int t = L.t();
  out["levels"] = t;
  out["j"] = L.indices.j;
  nlohmann::json levels = nlohmann::json::array();
  for (int k = 1; k <= t; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    nlohmann::json e;
    e["k"] = k;
    e["B"] = to_json(L.B[kk]);
    e["u"] = L.u(k);
    e["b"] = L.b(k);
    e["r"] = L.r(k);
    e["Rbar"] = to_json(L.Rbar[kk]);
    e["Rtilde"] = to_json(L.Rtilde[kk]);
    e["Rprime"] = L.Rprime[kk];
    if (L.has_reduction_constants()) {
      e["u_det"] = L.u_det[kk] ? to_json(*L.u_det[kk]) : nlohmann::json(nullptr);
      if (kk < L.Bhat.size()) {
        e["Bhat"] = to_json(L.Bhat[kk]);
        e["Rhat"] = to_json(L.Rhat[kk]);
      }
    }
    levels.push_back(std::move(e));
  }
  out["per_level"] = std::move(levels);
  return out;
}

nlohmann::json to_json(const VerifyReport& rep) {
  nlohmann::json out;
  out["passed"] = rep.passed();
  out["total"] = rep.checks.size();
  out["failures"] = rep.failures();
  out["reduction_skipped_from_level"] =
      rep.singular_level ? nlohmann::json(*rep.singular_level) : nlohmann::json(nullptr);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json e{{"identity", c.identity}, {"k", c.k}, {"passed", c.passed}};
    if (c.j >= 0) e["j"] = c.j;
    if (c.i > 0) e["i"] = c.i;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  out["checks"] = std::move(checks);
  out["ledger"] = to_json(rep.ledger);
  return out;
}

}  // namespace recprs::cli
