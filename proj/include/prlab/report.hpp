#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace prlab {

enum class ClaimStatus { pass, fail, not_applicable };

const char* to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string hypotheses;
  std::string universe;
  ClaimStatus status = ClaimStatus::not_applicable;
  /// Instances the claim was evaluated on (after filtering by hypotheses).
  std::size_t instances = 0;
  std::string witness;
  bool expected_fail = false;

  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

struct CheckReport {
  std::vector<ClaimResult> claims;

  /// Every claim not marked expected_fail passes or is not applicable.
  bool ok() const;
  void append(const CheckReport& other) { claims.insert(claims.end(), other.claims.begin(), other.claims.end()); }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace prlab
