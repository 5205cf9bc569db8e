#include "puzzle/scramble.hpp"

#include <random>
#include <vector>

#include "core/search.hpp"
#include "puzzle/heuristics.hpp"
#include "puzzle/spaces.hpp"

namespace searchlab::puzzle {

ScrambleResult scramble(std::uint64_t seed, int walk_length) {
  if (walk_length < 0) {
    throw core::SearchError(core::ErrorCode::kBadArgument,
                            "walk_length must be nonnegative");
  }
  static const std::shared_ptr<const core::ProblemSpace> base =
      make_space(Variant::kBase);
  // rng() % n rather than uniform_int_distribution: the distribution's
  // mapping is implementation-defined, and same seed -> same instance must
  // hold across toolchains.
  std::mt19937_64 rng(seed);
  core::StateId state = goal_id();
  core::StateId previous = state;
  std::vector<core::Edge> edges;
  std::vector<core::StateId> moves;
  for (int step = 0; step < walk_length; ++step) {
    base->successors(state, edges);
    moves.clear();
    for (const core::Edge& e : edges) {
      if (e.to != previous) moves.push_back(e.to);
    }
    const core::StateId next =
        moves[static_cast<size_t>(rng() % moves.size())];
    previous = state;
    state = next;
  }
  MdHeuristic h;
  const int depth =
      state == goal_id() ? 0 : core::astar(*base, state, h).optimal_cost;
  return {state, depth};
}

}  // namespace searchlab::puzzle
