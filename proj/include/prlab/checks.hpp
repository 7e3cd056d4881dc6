#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prlab/preradical.hpp"
#include "prlab/report.hpp"

namespace prlab {

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::string hypotheses;
  /// Known to be false as stated; a failure does not fail `check all`.
  bool expected_fail = false;
};

/// Every registered claim, in report order.
std::vector<ClaimInfo> claim_registry();

struct CheckOptions {
  /// Tables beyond this count switch the table-quantified claims to a sample.
  std::size_t enumeration_budget = 5000;
  /// Claims over pairs of tables use at most this many tables.
  std::size_t pair_limit = 80;
};

/// The tables claims are quantified over: every table when enumeration fits
/// the budget, otherwise builtins, alpha/omega tables and their operator images.
std::vector<Preradical> claim_tables(const UniversePtr& u, std::size_t budget, bool* exhaustive = nullptr);

CheckReport check_all(const UniversePtr& u, const CheckOptions& opts = {});
/// Throws InvalidParameter for an unknown id.
CheckReport check_claim(const UniversePtr& u, const std::string& id, const CheckOptions& opts = {});

}  // namespace prlab
