#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "core/types.hpp"

namespace searchlab::puzzle {

// Row-major cell contents; 0 denotes the blank. Always a permutation of
// 0..8. Both parity classes are representable since relaxed variants connect
// them.
using Cells = std::array<std::uint8_t, 9>;

// Tiles 1-8 clockwise around the border starting top left, blank in the
// middle.
inline constexpr Cells kGoalCells = {1, 2, 3, 8, 0, 4, 7, 6, 5};

inline constexpr std::uint32_t kPermutationCount = 362880;  // 9!

// Nibble-packed canonical encoding: cell i occupies bits [4i, 4i+4).
core::StateId pack(const Cells& cells);
Cells unpack(core::StateId id);

core::StateId goal_id();

// Lehmer rank, a bijection between permutations and [0, 9!).
std::uint32_t perm_rank(const Cells& cells);
Cells perm_unrank(std::uint32_t rank);

std::uint32_t rank_of(core::StateId id);
core::StateId id_at_rank(std::uint32_t rank);

bool valid_cells(const Cells& cells);
int blank_position(const Cells& cells);

// Text form: 9 whitespace-separated integers, row-major, 0 = blank.
std::string to_text(core::StateId id);
core::StateId from_text(std::string_view text);  // throws kParseError

}  // namespace searchlab::puzzle
