#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "recprs/prs.hpp"
#include "recprs/recsubres.hpp"

namespace recprs::cli {

struct IdentityCheck {
  std::string identity;
  int k = 0;
  int j = -1;  // -1 when the check is not tied to a degree
  int i = 0;   // PRS index for the per-element theorems, 0 otherwise
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<IdentityCheck> checks;
  ScaleLedger ledger;
  std::optional<int> singular_level;  // reduction skipped from this level on
  bool passed() const;
  std::size_t failures() const;
};

/// Lets tests perturb the ledger before it is used.
using LedgerHook = std::function<void(ScaleLedger&)>;

/// Recomputes both sides of every identity relating the PRS, the four
/// subresultant families and the ledger constants, for every valid (k, j).
VerifyReport verify_identities(const RecursivePrs& rprs, const LedgerHook& hook = {});

nlohmann::json to_json(const VerifyReport& report);
nlohmann::json to_json(const ScaleLedger& ledger);

}  // namespace recprs::cli
