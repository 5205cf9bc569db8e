#pragma once

#include <memory>
#include <vector>

#include "core/heuristic.hpp"
#include "core/problem_space.hpp"
#include "core/types.hpp"
#include "puzzle/tables.hpp"

namespace searchlab::testing {

// Shared spaces and goal-rooted distance tables, built once per test binary
// on first use. A table costs about a second to build; tests that never
// touch one pay nothing.
std::shared_ptr<const core::ProblemSpace> base_space();
std::shared_ptr<const core::ProblemSpace> ra_space();
std::shared_ptr<const core::ProblemSpace> checkra_space();

const puzzle::DistanceTable& base_goal_table();
const puzzle::DistanceTable& ra_goal_table();
const puzzle::DistanceTable& checkra_goal_table();

// Deterministic sample of states from the goal's component of the base
// space (duplicates possible, order fixed by the seed).
std::vector<core::StateId> solvable_samples(std::uint64_t seed, int count);

// Exact goal distance read off a table; the oracle stand-in for h*.
class TableHeuristic final : public core::Heuristic {
 public:
  explicit TableHeuristic(const puzzle::DistanceTable& table)
      : table_(table) {}

  int evaluate(core::StateId s) override { return table_.at(s); }
  Kind kind() const override { return Kind::kAlgorithmic; }

 private:
  const puzzle::DistanceTable& table_;
};

// Runs fn and reports the SearchError code it throws; fails the enclosing
// doctest assertion chain if nothing is thrown.
template <typename Fn>
core::ErrorCode thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const core::SearchError& e) {
    return e.code();
  }
  return static_cast<core::ErrorCode>(-1);
}

}  // namespace searchlab::testing
