#pragma once

#include "core/types.hpp"

namespace searchlab::core {

// A state -> nonnegative cost estimate. evaluate() must be deterministic and
// total on the parent space's reachable states, and must return 0 for every
// goal state of the parent problem.
//
// Algorithmic heuristics are stateless and shareable across concurrent
// searches. Search-based heuristics run a sub-search per evaluation, mutate
// their ledger (and cache, when enabled) and are single-search-owned.
class Heuristic {
 public:
  enum class Kind { kAlgorithmic, kSearchBased };

  virtual ~Heuristic() = default;

  virtual int evaluate(StateId s) = 0;
  virtual Kind kind() const = 0;
};

}  // namespace searchlab::core
