#include "commands.hpp"

#include <chrono>
#include <sstream>

#include "polytext.hpp"
#include "recprs/error.hpp"
#include "recprs/nested.hpp"
#include "recprs/reduced.hpp"
#include "recprs/rootcount.hpp"
#include "recprs/subres.hpp"

namespace recprs::cli {

namespace {

using nlohmann::json;

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& e : m.row(r)) row.push_back(e.get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json sequence_json(const SignSequence& s) {
  json out = json::array();
  for (const auto& v : s.values()) out.push_back(to_json(v));
  return out;
}

template <class Fn>
std::int64_t micros(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

}  // namespace

DivisionRule rule_by_name(const std::string& name) {
  if (name == "sturm") return sturm_rule();
  if (name == "monic") return monic_rule();
  throw ParseError("unknown division rule \"" + name + "\" (expected sturm or monic)");
}

SubresKind subres_kind_by_name(const std::string& name) {
  if (name == "classic") return SubresKind::Classic;
  if (name == "recursive") return SubresKind::Recursive;
  if (name == "nested") return SubresKind::Nested;
  if (name == "reduced") return SubresKind::Reduced;
  throw ParseError("unknown subresultant kind \"" + name + "\"");
}

json to_json(const Prs& prs) {
  json elements = json::array();
  for (std::size_t i = 0; i < prs.length(); ++i) {
    json e = to_json(prs.elements[i]);
    e["index"] = i + 1;
    elements.push_back(std::move(e));
  }
  json steps = json::array();
  for (std::size_t s = 0; s < prs.steps.size(); ++s) {
    const PrsStep& st = prs.steps[s];
    steps.push_back({{"index", s + 3},
                     {"alpha", to_json(st.alpha)},
                     {"beta", to_json(st.beta)},
                     {"quotient", to_json(st.quotient)}});
  }
  return {{"elements", std::move(elements)},
          {"steps", std::move(steps)},
          {"complete", prs.complete()}};
}

json to_json(const RecursivePrs& rprs) {
  json levels = json::array();
  for (int k = 1; k <= rprs.t(); ++k) {
    json lv = to_json(rprs.level(k));
    lv["level"] = k;
    levels.push_back(std::move(lv));
  }
  return {{"rule", rprs.rule_name()},
          {"levels", std::move(levels)},
          {"level_count", rprs.t()},
          {"polynomial_count", rprs.polynomial_count()},
          {"j", rprs.indices().j},
          {"complete", rprs.complete()}};
}

json cmd_prs(const Poly& f, const Poly& g, const DivisionRule& rule) {
  json out = to_json(compute_prs(f, g, rule));
  out["rule"] = rule.name();
  return out;
}

json cmd_rprs(const Poly& f, const Poly& g, const DivisionRule& rule) {
  return to_json(compute_recursive_prs(f, g, rule));
}

json cmd_subres(const Poly& f, const Poly& g, const DivisionRule& rule, const SubresRequest& req) {
  json out{{"k", req.k}, {"j", req.j}};
  RatMatrix matrix;
  Poly poly;
  if (req.kind == SubresKind::Classic && req.k == 1) {
    out["kind"] = "classic";
    matrix = subres_matrix(f, g, req.j).matrix;
    poly = minor_polynomial(matrix, req.j);
  } else {
    const RecursivePrs rprs = compute_recursive_prs(f, g, rule);
    out["rule"] = rprs.rule_name();
    switch (req.kind) {
      case SubresKind::Classic: {
        out["kind"] = "classic";
        if (req.k < 1 || req.k > rprs.t()) {
          throw Error(ErrorKind::IndexOutOfRange, "level k out of range");
        }
        matrix = subres_matrix(rprs.P(req.k, 1), rprs.P(req.k, 2), req.j).matrix;
        break;
      }
      case SubresKind::Recursive:
        out["kind"] = "recursive";
        matrix = build_recsubres_matrix(rprs, req.k, req.j).matrix;
        break;
      case SubresKind::Nested:
        out["kind"] = "nested";
        matrix = nested_matrix(rprs, req.k, req.j).matrix;
        break;
      case SubresKind::Reduced: {
        out["kind"] = "reduced";
        ReducedNestedMatrix red = reduced_nested_matrix(rprs, req.k, req.j);
        out["u_det"] = to_json(red.u_det);
        matrix = std::move(red.matrix);
        break;
      }
    }
    poly = minor_polynomial(matrix, req.j);
  }
  out["rows"] = matrix.rows();
  out["cols"] = matrix.cols();
  out["polynomial"] = to_json(poly);
  if (req.include_matrix) out["matrix"] = matrix_json(matrix);
  return out;
}

json cmd_rootcount(const Poly& p) {
  const RecursivePrs rprs = recursive_sturm_sequence(p);
  const RootCount rc = count_real_roots_with_multiplicity(p);
  json levels = json::array();
  for (int k = 1; k <= rprs.t(); ++k) {
    const SignSequence lo = lambda_at_infinity(rprs.level(k), Infinity::Negative);
    const SignSequence hi = lambda_at_infinity(rprs.level(k), Infinity::Positive);
    levels.push_back({{"level", k},
                      {"at_minus_infinity", sequence_json(lo)},
                      {"at_plus_infinity", sequence_json(hi)},
                      {"variations_minus", sign_variations(lo)},
                      {"variations_plus", sign_variations(hi)},
                      {"contribution", rc.per_level[static_cast<std::size_t>(k - 1)]}});
  }
  return {{"count", rc.total}, {"per_level", rc.per_level}, {"levels", std::move(levels)}};
}

void corrupt_ledger(ScaleLedger& ledger) {
  for (auto& r : ledger.Rbar) r *= 2;
}

json cmd_verify(const Poly& f, const Poly& g, const DivisionRule& rule, const LedgerHook& hook,
                bool& passed) {
  const RecursivePrs rprs = compute_recursive_prs(f, g, rule);
  const VerifyReport rep = verify_identities(rprs, hook);
  passed = rep.passed();
  json out = to_json(rep);
  out["rule"] = rprs.rule_name();
  out["F"] = to_text(f);
  out["G"] = to_text(g);
  return out;
}

json bench_instance(const Poly& f, const Poly& g, const DivisionRule& rule,
                    const BenchOptions& opt) {
  const RecursivePrs rprs = compute_recursive_prs(f, g, rule);
  const RecursiveIndices idx = rprs.indices();
  const ScaleLedger L = scale_ledger(rprs);
  json rows = json::array();
  for (int k = 1; k <= rprs.t(); ++k) {
    const int hi = max_valid_degree(idx, k);
    for (int j = 0; j <= hi; ++j) {
      const MatrixSize rec = prop1_size(idx, k, j);
      const int J = L.J(k, j);
      json row{{"k", k},
               {"j", j},
               {"recursive_rows", rec.rows},
               {"recursive_cols", rec.cols},
               {"reduced_rows", J + j},
               {"reduced_cols", J}};
      if (rec.cols <= opt.max_cols) {
        row["recursive_us"] = micros([&] { (void)recsubres_poly(rprs, k, j); });
        try {
          row["reduced_us"] = micros([&] { (void)reduced_nested_poly(rprs, k, j); });
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SingularU) throw;
          row["reduced_us"] = nullptr;
        }
      } else {
        row["recursive_us"] = nullptr;
        row["reduced_us"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

json bench_sweep(int lo, int hi, const DivisionRule& rule, const BenchOptions& opt) {
  json table = json::array();
  for (int m = std::max(lo, 2); m <= hi; ++m) {
    const Poly f = pow(Poly::x() - Poly{1}, static_cast<unsigned>((m + 1) / 2)) *
                   pow(Poly::x() + Poly{1}, static_cast<unsigned>(m / 2));
    for (json row : bench_instance(f, f.derivative(), rule, opt)) {
      row["m"] = m;
      table.push_back(std::move(row));
    }
  }
  return table;
}

std::string bench_csv(const json& table) {
  static const char* const columns[] = {"m",           "k",           "j",
                                        "recursive_rows", "recursive_cols", "reduced_rows",
                                        "reduced_cols",   "recursive_us",   "reduced_us"};
  std::ostringstream out;
  bool first = true;
  for (const char* c : columns) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << '\n';
  for (const auto& row : table) {
    first = true;
    for (const char* c : columns) {
      out << (first ? "" : ",");
      first = false;
      if (row.contains(c) && !row[c].is_null()) out << row[c].dump();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace recprs::cli
