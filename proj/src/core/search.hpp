#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/heuristic.hpp"
#include "core/problem_space.hpp"
#include "core/types.hpp"

namespace searchlab::core {

// Frontier record. f = g + h always; with a monotone heuristic the f values
// of nodes in expansion order are nondecreasing.
struct SearchNode {
  StateId state;
  int g;
  int h;
  int f;
  std::optional<StateId> parent;
};

struct SearchOptions {
  TieBreakRule tie = TieBreakRule::kFifo;
  // Maximum number of expansions before the search aborts with
  // kLimitExceeded. 0 means unlimited. Experiments run unbudgeted.
  std::uint64_t expansion_budget = 0;
};

struct ExpandedEntry {
  StateId state;
  int g;
  int f;
};

struct SearchOutcome {
  int optimal_cost = 0;
  std::vector<StateId> path;  // initial .. goal along successor edges
  std::vector<ExpandedEntry> expanded;  // in expansion order
  std::uint64_t expansion_count = 0;
  std::uint64_t max_frontier = 0;

  const ExpandedEntry& goal_entry() const { return expanded.back(); }
};

// Best-first search ordered by f = g + h. An expansion removes a node from
// the frontier and generates its successors; selecting a goal counts as the
// final expansion (with no successor generation) and terminates the search.
// With an admissible heuristic the returned cost is optimal.
//
// Duplicate handling uses a closed set; a strictly better path to a closed
// state raises kReopenDetected (monotonicity tripwire). The heuristic is
// evaluated once per discovered state; goal states are assigned h = 0
// without an evaluate() call.
//
// Throws SearchError(kNoGoalReachable) when the frontier exhausts and
// SearchError(kLimitExceeded) when the expansion budget is hit. If `ledger`
// is given, each expansion increments ledger->base_expansions.
SearchOutcome astar(const ProblemSpace& space, StateId start, Heuristic& h,
                    const SearchOptions& options = {},
                    ExpansionLedger* ledger = nullptr);

// Convenience overload starting from space.initial().
SearchOutcome astar(const ProblemSpace& space, Heuristic& h,
                    const SearchOptions& options = {},
                    ExpansionLedger* ledger = nullptr);

// Tie-break rule under which a zero heuristic makes the search expand
// exactly the nodes with g*(n) < C* plus the goal, i.e. the configuration
// equivalent to Dijkstra's algorithm.
inline constexpr TieBreakRule kDijkstraTie = TieBreakRule::kGoalFirst;

}  // namespace searchlab::core
