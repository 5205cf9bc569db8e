#pragma once

#include <memory>
#include <vector>

#include "core/heuristic.hpp"
#include "core/problem_space.hpp"
#include "core/search.hpp"

namespace searchlab::relax {

// An ordered chain of problem spaces [P, P', ...] in which each element is a
// relaxation of its predecessor (same state identity), plus an algorithmic
// heuristic valid for the last element. The goal predicate of every space in
// the chain must accept every base-level goal state.
struct HierarchySpec {
  std::vector<std::shared_ptr<const core::ProblemSpace>> chain;
  std::shared_ptr<core::Heuristic> bottom;
  core::TieBreakRule tie = core::TieBreakRule::kFifo;
  bool cache = false;  // memoize heuristic values per state; off for theorem runs

  void validate() const;
};

// Runs A* on chain[0], with each level's heuristic computed by an A*
// sub-search of the next level, bottoming out at spec.bottom. All non-base
// expansions are charged to ledger.secondary_expansions. A chain of length 1
// is identical to astar(chain[0], *bottom).
core::SearchOutcome hierarchical_astar(const HierarchySpec& spec,
                                       core::StateId start,
                                       core::ExpansionLedger& ledger,
                                       std::uint64_t expansion_budget = 0);

core::SearchOutcome hierarchical_astar(const HierarchySpec& spec,
                                       core::ExpansionLedger& ledger);

}  // namespace searchlab::relax
