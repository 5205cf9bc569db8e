#include "puzzle/tables.hpp"

#include <limits>

#include "core/uniform_cost.hpp"
#include "puzzle/board.hpp"

namespace searchlab::puzzle {

DistanceTable::DistanceTable(const core::ProblemSpace& space,
                             core::StateId source)
    : dist_(kPermutationCount, kUnreachable) {
  const auto map = core::uniform_cost_map(space, source,
                                          std::numeric_limits<int>::max());
  for (const auto& [state, g] : map) {
    dist_[rank_of(state)] = static_cast<std::uint8_t>(g);
    ++reachable_count_;
  }
}

int DistanceTable::at(core::StateId s) const {
  const std::uint8_t d = dist_[rank_of(s)];
  if (d == kUnreachable) {
    throw core::SearchError(core::ErrorCode::kOracleMissing,
                            "state outside the table's component");
  }
  return d;
}

bool DistanceTable::reachable(core::StateId s) const {
  return dist_[rank_of(s)] != kUnreachable;
}

}  // namespace searchlab::puzzle
