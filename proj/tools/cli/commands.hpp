#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "recprs/prs.hpp"
#include "verify.hpp"

namespace recprs::cli {

/// "sturm" or "monic"; anything else throws ParseError.
DivisionRule rule_by_name(const std::string& name);

nlohmann::json to_json(const Prs& prs);
nlohmann::json to_json(const RecursivePrs& rprs);

nlohmann::json cmd_prs(const Poly& f, const Poly& g, const DivisionRule& rule);
nlohmann::json cmd_rprs(const Poly& f, const Poly& g, const DivisionRule& rule);

enum class SubresKind { Classic, Recursive, Nested, Reduced };
SubresKind subres_kind_by_name(const std::string& name);

struct SubresRequest {
  SubresKind kind = SubresKind::Classic;
  int k = 1;
  int j = 0;
  bool include_matrix = false;
};

/// Classic on level 1 works for any pair with deg f >= deg g >= 1; every
/// other request goes through the recursive PRS of (f, g).
nlohmann::json cmd_subres(const Poly& f, const Poly& g, const DivisionRule& rule,
                          const SubresRequest& req);

nlohmann::json cmd_rootcount(const Poly& p);

nlohmann::json cmd_verify(const Poly& f, const Poly& g, const DivisionRule& rule,
                          const LedgerHook& hook, bool& passed);

/// Scales every R̄_k by 2: a negative control for cmd_verify.
void corrupt_ledger(ScaleLedger& ledger);

struct BenchOptions {
  std::int64_t max_cols = 200;  // larger matrices are sized but not built
};

/// One row per valid (k, j): closed-form sizes of the recursive and reduced
/// matrices, and construction plus determinant times in microseconds.
nlohmann::json bench_instance(const Poly& f, const Poly& g, const DivisionRule& rule,
                              const BenchOptions& opt);

/// Sweep over the family (x-1)^ceil(m/2) (x+1)^floor(m/2) with G = F' for
/// m = lo..hi; each row carries its m. lo > hi gives an empty table.
nlohmann::json bench_sweep(int lo, int hi, const DivisionRule& rule, const BenchOptions& opt);

/// CSV rendering of a bench table (header plus one line per row).
std::string bench_csv(const nlohmann::json& table);

}  // namespace recprs::cli
