#pragma once

#include <unordered_map>

#include "core/problem_space.hpp"
#include "core/types.hpp"

namespace searchlab::core {

// Uniform-cost sweep from `start`. Returns exactly {n : g*(n) <= bound} with
// exact g* values. Deterministic; independent of the A* engine so it can
// serve as its oracle.
std::unordered_map<StateId, int> uniform_cost_map(const ProblemSpace& space,
                                                  StateId start, int bound);

// Exact optimal cost from `start` to the nearest goal, by uniform-cost sweep.
// Throws SearchError(kNoGoalReachable) when no goal is reachable.
int oracle_optimal_cost(const ProblemSpace& space, StateId start);

}  // namespace searchlab::core
