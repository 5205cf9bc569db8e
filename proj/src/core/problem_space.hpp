#pragma once

#include <string>
#include <vector>

#include "core/types.hpp"

namespace searchlab::core {

// A state space with one initial state, a goal predicate and a successor
// relation with nonnegative integer edge costs.
//
// Implementations must be immutable after construction and safely shareable
// by concurrent searches. Successor order must be deterministic for a given
// state. A relaxed space of parent P contains every state of P and every
// successor edge of P with cost no greater than the P cost.
class ProblemSpace {
 public:
  virtual ~ProblemSpace() = default;

  virtual StateId initial() const = 0;
  virtual bool is_goal(StateId s) const = 0;
  virtual void successors(StateId s, std::vector<Edge>& out) const = 0;
  virtual const std::string& name() const = 0;
};

// Dense bijection between the StateIds of a space and [0, size). Optional;
// spaces that provide one enable array-backed sweeps instead of hash maps.
class DenseStateIndex {
 public:
  virtual ~DenseStateIndex() = default;

  virtual std::uint32_t size() const = 0;
  virtual std::uint32_t index_of(StateId s) const = 0;
  virtual StateId state_at(std::uint32_t index) const = 0;
};

}  // namespace searchlab::core
