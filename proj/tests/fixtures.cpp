#include "fixtures.hpp"

#include <random>

#include "puzzle/board.hpp"
#include "puzzle/spaces.hpp"

namespace searchlab::testing {

std::shared_ptr<const core::ProblemSpace> base_space() {
  static const auto space = puzzle::make_space(puzzle::Variant::kBase);
  return space;
}

std::shared_ptr<const core::ProblemSpace> ra_space() {
  static const auto space = puzzle::make_space(puzzle::Variant::kRa);
  return space;
}

std::shared_ptr<const core::ProblemSpace> checkra_space() {
  static const auto space = puzzle::make_space(puzzle::Variant::kCheckRa);
  return space;
}

const puzzle::DistanceTable& base_goal_table() {
  static const puzzle::DistanceTable table(*base_space(), puzzle::goal_id());
  return table;
}

const puzzle::DistanceTable& ra_goal_table() {
  static const puzzle::DistanceTable table(*ra_space(), puzzle::goal_id());
  return table;
}

const puzzle::DistanceTable& checkra_goal_table() {
  static const puzzle::DistanceTable table(*checkra_space(),
                                           puzzle::goal_id());
  return table;
}

std::vector<core::StateId> solvable_samples(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<core::StateId> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const auto rank =
        static_cast<std::uint32_t>(rng() % puzzle::kPermutationCount);
    const core::StateId id = puzzle::id_at_rank(rank);
    if (base_goal_table().reachable(id)) out.push_back(id);
  }
  return out;
}

}  // namespace searchlab::testing
