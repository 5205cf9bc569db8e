#pragma once

#include <memory>
#include <unordered_map>

#include "core/heuristic.hpp"
#include "core/types.hpp"
#include "puzzle/spaces.hpp"

namespace searchlab::puzzle {

// Manhattan distance of tiles 1-8 to their goal cells; the blank is ignored.
int md(core::StateId puzzle_state);

// Exact optimal cost in the relaxed-adjacency space, from the cycle
// structure of the permutation: the blank's cycle of length L costs L - 1,
// every other cycle of length L >= 2 costs L + 1 (the blank must enter and
// leave it). No search. Gated by an exhaustive BFS-oracle equivalence test.
int ra_exact(core::StateId puzzle_state);

class MdHeuristic final : public core::Heuristic {
 public:
  int evaluate(core::StateId s) override { return md(s); }
  Kind kind() const override { return Kind::kAlgorithmic; }
};

class RaExactHeuristic final : public core::Heuristic {
 public:
  int evaluate(core::StateId s) override { return ra_exact(s); }
  Kind kind() const override { return Kind::kAlgorithmic; }
};

// Projected Manhattan distance over factor states; admissible guidance for
// factor-space sub-searches.
class FactorMdHeuristic final : public core::Heuristic {
 public:
  int evaluate(core::StateId s) override { return factor_md(s); }
  Kind kind() const override { return Kind::kAlgorithmic; }
};

enum class XyMode {
  kPerCallSearch,     // solve both factors by A* per evaluation
  kPrecomputedTable,  // one-time backward sweep per factor space
};

// X-Y heuristic: optimal cost of the column factor plus optimal cost of the
// row factor. Per-call mode charges every factor-space expansion to
// ledger->secondary_expansions and appends a per_call entry; table mode is
// an explicitly-flagged speedup transformation (one backward uniform-cost
// sweep per factor at construction, zero per-call expansions) and is
// excluded from theorem experiments.
class XyHeuristic final : public core::Heuristic {
 public:
  XyHeuristic(XyMode mode, core::ExpansionLedger* ledger);

  int evaluate(core::StateId puzzle_state) override;
  Kind kind() const override {
    return mode_ == XyMode::kPerCallSearch ? Kind::kSearchBased
                                           : Kind::kAlgorithmic;
  }

 private:
  int factor_cost(core::StateId factor_state,
                  const core::ProblemSpace& space,
                  const std::unordered_map<core::StateId, int>& table,
                  std::uint64_t* expansions);

  XyMode mode_;
  core::ExpansionLedger* ledger_;
  std::shared_ptr<const core::ProblemSpace> x_space_;
  std::shared_ptr<const core::ProblemSpace> y_space_;
  FactorMdHeuristic factor_md_;
  std::unordered_map<core::StateId, int> x_table_;  // table mode only
  std::unordered_map<core::StateId, int> y_table_;
};

// Free-function form: cost_X + cost_Y for one state.
int xy(core::StateId puzzle_state, XyMode mode, core::ExpansionLedger& ledger);

}  // namespace searchlab::puzzle
