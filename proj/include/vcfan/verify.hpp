// The claim registry: every computational statement the library reproduces,
// runnable as a suite.  Each claim checks one identity or classification
// statement exhaustively at desk scale, or over seed-deterministic samples.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vcfan {

struct ClaimResult {
  std::string id;         // stable identifier, e.g. "lemma-4.1"
  std::string statement;  // short human-readable statement
  bool pass;
  std::string details;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<std::string> claim_ids();

// scope: "all" or one claim id.
VerificationReport verify_claims(const std::string& scope, std::uint64_t seed);

}  // namespace vcfan
