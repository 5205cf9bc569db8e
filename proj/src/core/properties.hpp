#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "core/heuristic.hpp"
#include "core/problem_space.hpp"
#include "core/types.hpp"

namespace searchlab::core {

struct AdmissibilityViolation {
  StateId state;
  int h;
  int h_star;
};

struct MonotonicityViolation {
  StateId state;
  StateId successor;
  int h;
  int edge_cost;
  int h_successor;
};

struct PropertyReport {
  std::vector<AdmissibilityViolation> admissibility;
  std::vector<MonotonicityViolation> monotonicity;

  bool pass() const { return admissibility.empty() && monotonicity.empty(); }
};

// Checks h(n) <= h*(n) and h(n) <= c(n, n') + h(n') for every sampled n and
// every successor n'. `hstar` must supply the exact goal distance of every
// sample; a missing entry raises SearchError(kOracleMissing).
PropertyReport verify_heuristic_properties(
    const ProblemSpace& space, Heuristic& h, std::span<const StateId> samples,
    const std::unordered_map<StateId, int>& hstar);

}  // namespace searchlab::core
