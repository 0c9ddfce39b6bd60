#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "govlab/json_io.hpp"

namespace govlab {

enum class Verdict { Pass, Fail, MismatchReported };

std::string_view verdict_name(Verdict v);

struct ClaimInfo {
  std::string id;
  std::string description;
  std::string statement;  // the result being checked, in words
};

using ClaimParams = std::map<std::string, std::int64_t>;

struct ClaimResult {
  std::string id;
  ClaimParams parameters;  // effective values, defaults filled in
  Verdict verdict = Verdict::Pass;
  /// Fail and MismatchReported always carry a non-empty "witnesses" array.
  Json evidence;
  double runtime_ms = 0.0;
};

struct ClaimReport {
  std::vector<ClaimResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t mismatch_reported = 0;

  bool any_failed() const { return failed > 0; }
};

/// Unknown claim id or a malformed / out-of-range parameter.
class ClaimError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// C1..C7, in that order.
const std::vector<ClaimInfo>& list_claims();

/// Defaults for a claim; throws ClaimError for an unknown id.
ClaimParams default_params(std::string_view id);

/// Runs one claim. Mathematical surprises become Fail / MismatchReported
/// evidence; only bad ids or parameters throw.
ClaimResult run_claim(std::string_view id, const ClaimParams& params, std::size_t workers = 1);

/// Runs C1..C7; `overrides` maps a claim id to parameter overrides.
/// Claims that need the same range scan share it.
ClaimReport run_all(const std::map<std::string, ClaimParams>& overrides = {}, std::size_t workers = 1);

Json to_json(const ClaimResult& r, bool include_runtime);
Json to_json(const ClaimReport& r, bool include_runtime);

}  // namespace govlab
