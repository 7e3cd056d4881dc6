#include "prlab/report.hpp"

#include <algorithm>

namespace prlab {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

bool CheckReport::ok() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.expected_fail || c.status != ClaimStatus::fail; });
}

}  // namespace prlab
