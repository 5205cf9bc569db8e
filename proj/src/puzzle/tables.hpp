#pragma once

#include <cstdint>
#include <vector>

#include "core/problem_space.hpp"
#include "core/types.hpp"

namespace searchlab::puzzle {

// Exact distances from one source to every packed puzzle permutation,
// indexed by Lehmer rank. All puzzle variants are undirected, so a
// goal-rooted table doubles as distance-to-goal. Built by the uniform-cost
// oracle, not by the A* engine.
class DistanceTable {
 public:
  static constexpr std::uint8_t kUnreachable = 255;

  DistanceTable(const core::ProblemSpace& space, core::StateId source);

  // Throws kOracleMissing for states outside the source's component.
  int at(core::StateId s) const;
  bool reachable(core::StateId s) const;
  std::uint32_t reachable_count() const { return reachable_count_; }

 private:
  std::vector<std::uint8_t> dist_;
  std::uint32_t reachable_count_ = 0;
};

}  // namespace searchlab::puzzle
