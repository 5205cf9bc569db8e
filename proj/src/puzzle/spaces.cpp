#include "puzzle/spaces.hpp"

#include <algorithm>
#include <cstdlib>

namespace searchlab::puzzle {

namespace {

constexpr std::array<int, 9> make_goal_cell_of() {
  std::array<int, 9> out{};
  for (int i = 0; i < 9; ++i) out[kGoalCells[static_cast<size_t>(i)]] = i;
  return out;
}

// goal_cell_of[tile] = cell the tile occupies in the goal layout
constexpr std::array<int, 9> kGoalCellOf = make_goal_cell_of();

// Orthogonal neighbors per cell, ascending, -1 padded.
constexpr int kNeighbors[9][5] = {
    {1, 3, -1, -1, -1}, {0, 2, 4, -1, -1}, {1, 5, -1, -1, -1},
    {0, 4, 6, -1, -1},  {1, 3, 5, 7, -1},  {2, 4, 8, -1, -1},
    {3, 7, -1, -1, -1}, {4, 6, 8, -1, -1}, {5, 7, -1, -1, -1}};

constexpr int kColor0Cells[5] = {0, 2, 4, 6, 8};
constexpr int kColor1Cells[4] = {1, 3, 5, 7};

// Move the tile at cell q into the blank cell b (which must hold 0).
core::StateId swap_blank(core::StateId id, int b, int q) {
  const core::StateId tile = (id >> (4 * q)) & 0xF;
  id &= ~(core::StateId{0xF} << (4 * q));
  id |= tile << (4 * b);
  return id;
}

class PermSpace : public core::ProblemSpace {
 public:
  PermSpace(std::string name, core::StateId initial)
      : name_(std::move(name)), initial_(initial) {}

  core::StateId initial() const override { return initial_; }
  bool is_goal(core::StateId s) const override { return s == goal_id(); }
  const std::string& name() const override { return name_; }

 private:
  std::string name_;
  core::StateId initial_;
};

class BaseSpace final : public PermSpace {
 public:
  using PermSpace::PermSpace;

  void successors(core::StateId s, std::vector<core::Edge>& out) const override {
    out.clear();
    const int b = blank_position(unpack(s));
    for (const int q : kNeighbors[b]) {
      if (q < 0) break;
      out.push_back({swap_blank(s, b, q), 1});
    }
  }
};

class RaSpace final : public PermSpace {
 public:
  using PermSpace::PermSpace;

  void successors(core::StateId s, std::vector<core::Edge>& out) const override {
    out.clear();
    const int b = blank_position(unpack(s));
    for (int q = 0; q < 9; ++q) {
      if (q == b) continue;
      out.push_back({swap_blank(s, b, q), 1});
    }
  }
};

class CheckRaSpace final : public PermSpace {
 public:
  using PermSpace::PermSpace;

  void successors(core::StateId s, std::vector<core::Edge>& out) const override {
    out.clear();
    const int b = blank_position(unpack(s));
    if (cell_color(b) == 0) {
      for (const int q : kColor1Cells) out.push_back({swap_blank(s, b, q), 1});
    } else {
      for (const int q : kColor0Cells) out.push_back({swap_blank(s, b, q), 1});
    }
  }
};

class FactorSpace final : public core::ProblemSpace {
 public:
  FactorSpace(std::string name, core::StateId initial)
      : name_(std::move(name)), initial_(initial) {}

  core::StateId initial() const override { return initial_; }
  bool is_goal(core::StateId s) const override { return s == factor_goal(); }
  const std::string& name() const override { return name_; }

  void successors(core::StateId s, std::vector<core::Edge>& out) const override {
    out.clear();
    const FactorCells f = factor_unpack(s);
    const int b = f.blank_line;
    for (int a = b - 1; a <= b + 1; a += 2) {
      if (a < 0 || a > 2) continue;
      for (int j = 0; j < 3; ++j) {
        if (f.occupancy[static_cast<size_t>(a)][static_cast<size_t>(j)] == 0)
          continue;
        FactorCells g = f;
        --g.occupancy[static_cast<size_t>(a)][static_cast<size_t>(j)];
        ++g.occupancy[static_cast<size_t>(b)][static_cast<size_t>(j)];
        g.blank_line = static_cast<std::uint8_t>(a);
        out.push_back({factor_pack(g), 1});
      }
    }
  }

 private:
  std::string name_;
  core::StateId initial_;
};

class PermutationIndex final : public core::DenseStateIndex {
 public:
  std::uint32_t size() const override { return kPermutationCount; }
  std::uint32_t index_of(core::StateId s) const override { return rank_of(s); }
  core::StateId state_at(std::uint32_t index) const override {
    return id_at_rank(index);
  }
};

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::kBase:
      return "base-8puzzle";
    case Variant::kRa:
      return "relaxed-adjacency";
    case Variant::kCheckRa:
      return "check-relaxed-adjacency";
    case Variant::kXFactor:
      return "x-factor";
    case Variant::kYFactor:
      return "y-factor";
  }
  return "?";
}

int cell_color(int cell) { return (cell / 3 + cell % 3) % 2; }

std::shared_ptr<const core::ProblemSpace> make_space(Variant v) {
  const core::StateId start =
      (v == Variant::kXFactor || v == Variant::kYFactor) ? factor_goal()
                                                         : goal_id();
  return make_space(v, start);
}

std::shared_ptr<const core::ProblemSpace> make_space(Variant v,
                                                     core::StateId initial) {
  const std::string name = variant_name(v);
  switch (v) {
    case Variant::kBase:
      return std::make_shared<BaseSpace>(name, initial);
    case Variant::kRa:
      return std::make_shared<RaSpace>(name, initial);
    case Variant::kCheckRa:
      return std::make_shared<CheckRaSpace>(name, initial);
    case Variant::kXFactor:
    case Variant::kYFactor:
      return std::make_shared<FactorSpace>(name, initial);
  }
  throw core::SearchError(core::ErrorCode::kBadArgument, "unknown variant");
}

core::StateId factor_pack(const FactorCells& f) {
  core::StateId id = core::StateId{1} << 63;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      id |= core::StateId{f.occupancy[static_cast<size_t>(i)][static_cast<size_t>(j)]}
            << (2 * (3 * i + j));
    }
  }
  id |= core::StateId{f.blank_line} << 18;
  return id;
}

FactorCells factor_unpack(core::StateId id) {
  FactorCells f;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      f.occupancy[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          static_cast<std::uint8_t>((id >> (2 * (3 * i + j))) & 0x3);
    }
  }
  f.blank_line = static_cast<std::uint8_t>((id >> 18) & 0x3);
  return f;
}

bool is_factor_id(core::StateId id) { return (id >> 63) != 0; }

core::StateId factor_project(core::StateId puzzle_state, Axis axis) {
  const Cells cells = unpack(puzzle_state);
  FactorCells f{};
  for (int cell = 0; cell < 9; ++cell) {
    const int tile = cells[static_cast<size_t>(cell)];
    const int line = axis == Axis::kX ? cell % 3 : cell / 3;
    if (tile == 0) {
      f.blank_line = static_cast<std::uint8_t>(line);
      continue;
    }
    const int goal_cell = kGoalCellOf[static_cast<size_t>(tile)];
    const int goal_line = axis == Axis::kX ? goal_cell % 3 : goal_cell / 3;
    ++f.occupancy[static_cast<size_t>(line)][static_cast<size_t>(goal_line)];
  }
  return factor_pack(f);
}

core::StateId factor_goal() {
  static const core::StateId id = factor_project(goal_id(), Axis::kX);
  return id;
}

int factor_md(core::StateId factor_state) {
  const FactorCells f = factor_unpack(factor_state);
  int sum = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      sum += f.occupancy[static_cast<size_t>(i)][static_cast<size_t>(j)] *
             std::abs(i - j);
    }
  }
  return sum;
}

std::vector<core::StateId> all_factor_states() {
  // Goal-line totals are fixed by the goal layout: 3, 2, 3 tiles.
  constexpr int kColumnSum[3] = {3, 2, 3};
  std::vector<core::StateId> out;
  for (int blank = 0; blank < 3; ++blank) {
    const int row_sum[3] = {3 - (blank == 0), 3 - (blank == 1),
                            3 - (blank == 2)};
    FactorCells f{};
    f.blank_line = static_cast<std::uint8_t>(blank);
    for (int a0 = 0; a0 <= kColumnSum[0]; ++a0)
      for (int a1 = 0; a1 <= kColumnSum[1]; ++a1)
        for (int a2 = 0; a2 <= kColumnSum[2]; ++a2) {
          if (a0 + a1 + a2 != row_sum[0]) continue;
          for (int b0 = 0; b0 <= kColumnSum[0] - a0; ++b0)
            for (int b1 = 0; b1 <= kColumnSum[1] - a1; ++b1)
              for (int b2 = 0; b2 <= kColumnSum[2] - a2; ++b2) {
                if (b0 + b1 + b2 != row_sum[1]) continue;
                const int c0 = kColumnSum[0] - a0 - b0;
                const int c1 = kColumnSum[1] - a1 - b1;
                const int c2 = kColumnSum[2] - a2 - b2;
                if (c0 + c1 + c2 != row_sum[2]) continue;
                f.occupancy = {{{static_cast<std::uint8_t>(a0),
                                 static_cast<std::uint8_t>(a1),
                                 static_cast<std::uint8_t>(a2)},
                                {static_cast<std::uint8_t>(b0),
                                 static_cast<std::uint8_t>(b1),
                                 static_cast<std::uint8_t>(b2)},
                                {static_cast<std::uint8_t>(c0),
                                 static_cast<std::uint8_t>(c1),
                                 static_cast<std::uint8_t>(c2)}}};
                out.push_back(factor_pack(f));
              }
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const core::DenseStateIndex& permutation_index() {
  static const PermutationIndex index;
  return index;
}

}  // namespace searchlab::puzzle
