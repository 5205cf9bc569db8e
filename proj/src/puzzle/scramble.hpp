#pragma once

#include <cstdint>

#include "core/types.hpp"

namespace searchlab::puzzle {

struct ScrambleResult {
  core::StateId state;
  int exact_depth;  // optimal solution cost, recomputed by search
};

// Applies walk_length random legal base moves from the goal, never
// immediately undoing the previous move, using a generator fully determined
// by `seed`. The exact depth is recomputed by A* with MD, so exact_depth <=
// walk_length always. Throws kBadArgument for negative walk_length.
ScrambleResult scramble(std::uint64_t seed, int walk_length);

}  // namespace searchlab::puzzle
