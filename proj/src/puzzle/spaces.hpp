#pragma once

#include <array>
#include <memory>
#include <vector>

#include "core/problem_space.hpp"
#include "core/types.hpp"
#include "puzzle/board.hpp"

namespace searchlab::puzzle {

// BASE     swap the blank with an orthogonally adjacent tile
// RA       swap the blank with any tile (adjacency deleted)
// CHECK_RA swap the blank with any tile on the opposite checkerboard color
// X/Y      line-occupancy factor of the board (columns for X, rows for Y)
//
// Every variant has unit edge costs and a symmetric successor relation.
// BASE/CHECK_RA/RA share PuzzleState identity and form a supergraph chain:
// successors_BASE(s) subset-of successors_CHECK_RA(s) subset-of
// successors_RA(s).
enum class Variant { kBase, kRa, kCheckRa, kXFactor, kYFactor };

const char* variant_name(Variant v);

// `initial` is the default start used by astar overloads that do not take an
// explicit start state; analysis code always passes starts explicitly.
std::shared_ptr<const core::ProblemSpace> make_space(Variant v);
std::shared_ptr<const core::ProblemSpace> make_space(Variant v,
                                                     core::StateId initial);

// (r + c) mod 2 for cell index r*3+c. Corners and center are color 0, edge
// midpoints color 1; orthogonal neighbors always differ.
int cell_color(int cell);

// --- factor spaces -------------------------------------------------------
//
// A factor state tracks, per line, how many tiles belonging to each goal
// line it holds, plus the blank's line. A move takes one tile from a line
// adjacent to the blank's into the blank's line and hands the blank the
// tile's former line. X and Y instantiate the same dynamics (goal line
// sizes are 3,2,3 for both axes); only the projection differs.

enum class Axis { kX, kY };

struct FactorCells {
  // occupancy[i][j] = tiles currently in line i whose goal line is j
  std::array<std::array<std::uint8_t, 3>, 3> occupancy;
  std::uint8_t blank_line;
};

// Packed encoding: occupancy[i][j] in bits [2*(3i+j), +2), blank_line in
// bits [18, 20), and bit 63 set to keep factor ids disjoint from packed
// puzzle ids.
core::StateId factor_pack(const FactorCells& f);
FactorCells factor_unpack(core::StateId id);
bool is_factor_id(core::StateId id);

core::StateId factor_project(core::StateId puzzle_state, Axis axis);
core::StateId factor_goal();

// Sum of occupancy[i][j] * |i - j|: the projected Manhattan distance along
// one axis. Admissible and monotone in the factor space.
int factor_md(core::StateId factor_state);

// Every valid factor state (row sums 3 minus the blank, goal-line totals
// 3,2,3), in ascending id order. Small enough to enumerate exhaustively.
std::vector<core::StateId> all_factor_states();

// Dense rank index over all 9! packed puzzle permutations, shared by the
// BASE/RA/CHECK_RA spaces.
const core::DenseStateIndex& permutation_index();

}  // namespace searchlab::puzzle
