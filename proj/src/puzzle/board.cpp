#include "puzzle/board.hpp"

#include <bit>
#include <cstddef>
#include <sstream>

namespace searchlab::puzzle {

namespace {
constexpr std::array<std::uint32_t, 9> kFactorial = {1,    1,    2,     6,
                                                     24,   120,  720,   5040,
                                                     40320};
}  // namespace

core::StateId pack(const Cells& cells) {
  core::StateId id = 0;
  for (int i = 8; i >= 0; --i) id = (id << 4) | cells[static_cast<size_t>(i)];
  return id;
}

Cells unpack(core::StateId id) {
  Cells cells;
  for (int i = 0; i < 9; ++i) {
    cells[static_cast<size_t>(i)] = static_cast<std::uint8_t>(id & 0xF);
    id >>= 4;
  }
  return cells;
}

core::StateId goal_id() {
  static const core::StateId id = pack(kGoalCells);
  return id;
}

std::uint32_t perm_rank(const Cells& cells) {
  std::uint32_t rank = 0;
  std::uint16_t seen = 0;
  for (int i = 0; i < 9; ++i) {
    const int value = cells[static_cast<size_t>(i)];
    const int smaller_unseen =
        value - std::popcount(static_cast<unsigned>(seen & ((1u << value) - 1)));
    rank += static_cast<std::uint32_t>(smaller_unseen) * kFactorial[static_cast<size_t>(8 - i)];
    seen = static_cast<std::uint16_t>(seen | (1u << value));
  }
  return rank;
}

Cells perm_unrank(std::uint32_t rank) {
  std::array<std::uint8_t, 9> remaining = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  int left = 9;
  Cells cells;
  for (int i = 0; i < 9; ++i) {
    const std::uint32_t f = kFactorial[static_cast<size_t>(8 - i)];
    const int pick = static_cast<int>(rank / f);
    rank %= f;
    cells[static_cast<size_t>(i)] = remaining[static_cast<size_t>(pick)];
    for (int j = pick; j + 1 < left; ++j) {
      remaining[static_cast<size_t>(j)] = remaining[static_cast<size_t>(j + 1)];
    }
    --left;
  }
  return cells;
}

std::uint32_t rank_of(core::StateId id) { return perm_rank(unpack(id)); }

core::StateId id_at_rank(std::uint32_t rank) { return pack(perm_unrank(rank)); }

bool valid_cells(const Cells& cells) {
  std::uint16_t seen = 0;
  for (const std::uint8_t value : cells) {
    if (value > 8) return false;
    if (seen & (1u << value)) return false;
    seen = static_cast<std::uint16_t>(seen | (1u << value));
  }
  return seen == 0x1FF;
}

int blank_position(const Cells& cells) {
  for (int i = 0; i < 9; ++i) {
    if (cells[static_cast<size_t>(i)] == 0) return i;
  }
  return -1;
}

std::string to_text(core::StateId id) {
  const Cells cells = unpack(id);
  std::string out;
  for (int i = 0; i < 9; ++i) {
    if (i > 0) out.push_back(' ');
    out.push_back(static_cast<char>('0' + cells[static_cast<size_t>(i)]));
  }
  return out;
}

core::StateId from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  Cells cells;
  for (int i = 0; i < 9; ++i) {
    int value = -1;
    if (!(in >> value) || value < 0 || value > 8) {
      throw core::SearchError(core::ErrorCode::kParseError,
                              "expected 9 integers in 0..8: '" +
                                  std::string(text) + "'");
    }
    cells[static_cast<size_t>(i)] = static_cast<std::uint8_t>(value);
  }
  std::string extra;
  if (in >> extra) {
    throw core::SearchError(core::ErrorCode::kParseError,
                            "trailing tokens after 9 cells: '" +
                                std::string(text) + "'");
  }
  if (!valid_cells(cells)) {
    throw core::SearchError(core::ErrorCode::kParseError,
                            "cells are not a permutation of 0..8: '" +
                                std::string(text) + "'");
  }
  return pack(cells);
}

}  // namespace searchlab::puzzle
