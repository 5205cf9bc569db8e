#include "puzzle/heuristics.hpp"

#include <cstdlib>
#include <limits>

#include "core/search.hpp"
#include "core/uniform_cost.hpp"

namespace searchlab::puzzle {

namespace {

constexpr std::array<int, 9> make_goal_cell_of() {
  std::array<int, 9> out{};
  for (int i = 0; i < 9; ++i) out[kGoalCells[static_cast<size_t>(i)]] = i;
  return out;
}

constexpr std::array<int, 9> kGoalCellOf = make_goal_cell_of();

}  // namespace

int md(core::StateId puzzle_state) {
  const Cells cells = unpack(puzzle_state);
  int sum = 0;
  for (int cell = 0; cell < 9; ++cell) {
    const int tile = cells[static_cast<size_t>(cell)];
    if (tile == 0) continue;
    const int goal = kGoalCellOf[static_cast<size_t>(tile)];
    sum += std::abs(cell / 3 - goal / 3) + std::abs(cell % 3 - goal % 3);
  }
  return sum;
}

int ra_exact(core::StateId puzzle_state) {
  const Cells cells = unpack(puzzle_state);
  // target[i] = cell where the tile now at i belongs
  std::array<int, 9> target;
  int blank_cell = 0;
  for (int i = 0; i < 9; ++i) {
    const int tile = cells[static_cast<size_t>(i)];
    target[static_cast<size_t>(i)] = kGoalCellOf[static_cast<size_t>(tile)];
    if (tile == 0) blank_cell = i;
  }
  std::array<bool, 9> seen{};
  int cost = 0;
  for (int i = 0; i < 9; ++i) {
    if (seen[static_cast<size_t>(i)] || target[static_cast<size_t>(i)] == i)
      continue;
    int length = 0;
    bool has_blank = false;
    for (int j = i; !seen[static_cast<size_t>(j)];
         j = target[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      has_blank |= j == blank_cell;
      ++length;
    }
    // The blank's own cycle unwinds directly; any other cycle needs the
    // blank to enter and leave it.
    cost += has_blank ? length - 1 : length + 1;
  }
  return cost;
}

XyHeuristic::XyHeuristic(XyMode mode, core::ExpansionLedger* ledger)
    : mode_(mode),
      ledger_(ledger),
      x_space_(make_space(Variant::kXFactor)),
      y_space_(make_space(Variant::kYFactor)) {
  if (mode_ == XyMode::kPrecomputedTable) {
    const int unbounded = std::numeric_limits<int>::max();
    x_table_ = core::uniform_cost_map(*x_space_, factor_goal(), unbounded);
    y_table_ = core::uniform_cost_map(*y_space_, factor_goal(), unbounded);
  }
}

int XyHeuristic::factor_cost(core::StateId factor_state,
                             const core::ProblemSpace& space,
                             const std::unordered_map<core::StateId, int>& table,
                             std::uint64_t* expansions) {
  if (mode_ == XyMode::kPrecomputedTable) {
    const auto it = table.find(factor_state);
    if (it == table.end()) {
      throw core::SearchError(core::ErrorCode::kNoGoalReachable,
                              "factor state outside the goal component");
    }
    return it->second;
  }
  core::ExpansionLedger sub;
  const core::SearchOutcome outcome =
      core::astar(space, factor_state, factor_md_, {}, &sub);
  *expansions += sub.base_expansions;
  return outcome.optimal_cost;
}

int XyHeuristic::evaluate(core::StateId puzzle_state) {
  std::uint64_t expansions = 0;
  const int cost_x = factor_cost(factor_project(puzzle_state, Axis::kX),
                                 *x_space_, x_table_, &expansions);
  const int cost_y = factor_cost(factor_project(puzzle_state, Axis::kY),
                                 *y_space_, y_table_, &expansions);
  if (mode_ == XyMode::kPerCallSearch && ledger_ != nullptr) {
    ledger_->secondary_expansions += expansions;
    ledger_->per_call.emplace_back(puzzle_state, expansions);
  }
  return cost_x + cost_y;
}

int xy(core::StateId puzzle_state, XyMode mode, core::ExpansionLedger& ledger) {
  XyHeuristic h(mode, &ledger);
  return h.evaluate(puzzle_state);
}

}  // namespace searchlab::puzzle
