#pragma once

#include <memory>
#include <unordered_map>

#include "core/heuristic.hpp"
#include "core/problem_space.hpp"
#include "core/search.hpp"
#include "core/types.hpp"

namespace searchlab::relax {

// evaluate(s) = c for all s. c = 0 is the heuristic derived from the most
// relaxed model (zero-cost paths between all state pairs), i.e. blind search.
std::unique_ptr<core::Heuristic> constant_heuristic(int c);

// True for heuristics made by constant_heuristic(0). Blind-search claims
// (the Dijkstra special case) key off this.
bool is_zero_heuristic(const core::Heuristic& h);

// Heuristic whose value is the exact optimal solution cost of `relaxed`
// from the evaluated state, computed by a fresh A* sub-search per call.
//
// Every evaluation adds the sub-search's expansions (all levels) to
// ledger->secondary_expansions and appends a per_call entry. With `cache`
// enabled, repeat evaluations of the same state return the memoized value
// with zero added expansions; memoized search still counts as search, so the
// kind stays kSearchBased. Theorem accounting assumes per-call sub-searches:
// verification runs keep the cache off.
//
// The returned heuristic keeps references to `relaxed`, `inner` and `ledger`
// and is single-search-owned (not shareable across concurrent searches).
// A kNoGoalReachable escape from the sub-search signals a malformed
// relaxation and is propagated.
std::unique_ptr<core::Heuristic> make_search_heuristic(
    std::shared_ptr<const core::ProblemSpace> relaxed,
    std::shared_ptr<core::Heuristic> inner, core::TieBreakRule tie,
    core::ExpansionLedger* ledger, bool cache);

}  // namespace searchlab::relax
