#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace searchlab::core {

// Canonical integer key for a state within one problem space. Equal states
// have equal encodings and encodings are stable across runs.
using StateId = std::uint64_t;

struct Edge {
  StateId to;
  int cost;  // nonnegative; unit for all puzzle variants
};

enum class TieBreakRule {
  kFifo,
  kLifo,
  kHighG,
  kLowH,
  kGoalFirst,
};

const char* tie_break_name(TieBreakRule rule);

enum class ErrorCode {
  kNoGoalReachable,
  kLimitExceeded,
  kReopenDetected,
  kOracleMissing,
  kBadCstar,
  kBadArgument,
  kParseError,
};

const char* error_code_name(ErrorCode code);

class SearchError : public std::runtime_error {
 public:
  SearchError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Expansion accounting shared by a base search and the secondary searches its
// heuristic evaluations spawn. Owned by a single search; not thread-safe.
struct ExpansionLedger {
  std::uint64_t base_expansions = 0;
  std::uint64_t secondary_expansions = 0;
  // One entry per search-based heuristic evaluation: the evaluated state and
  // the expansions its sub-search performed (including deeper levels).
  std::vector<std::pair<StateId, std::uint64_t>> per_call;

  std::uint64_t total() const { return base_expansions + secondary_expansions; }

  void reset() {
    base_expansions = 0;
    secondary_expansions = 0;
    per_call.clear();
  }
};

}  // namespace searchlab::core
