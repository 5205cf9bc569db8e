#pragma once

#include <memory>
#include <string>

#include "analysis/sets.hpp"
#include "core/heuristic.hpp"
#include "core/problem_space.hpp"
#include "core/types.hpp"
#include "puzzle/tables.hpp"

namespace searchlab::analysis {

// One instance's verdict: analytic set sizes, the two containment booleans,
// and the measured expansion totals of both actual algorithms.
struct DominationReport {
  core::StateId instance = 0;
  std::string chain;
  int cstar = 0;
  std::uint64_t direct_surely = 0;
  std::uint64_t direct_possibly = 0;
  std::uint64_t hier_surely = 0;
  std::uint64_t hier_possibly = 0;
  bool theorem1_holds = false;  // direct SURELY subset-of hier SURELY union
  bool theorem2_holds = false;  // same for POSSIBLY
  std::uint64_t direct_total = 0;
  std::uint64_t hier_total = 0;
  double ratio = 0.0;  // hier_total / direct_total
};

struct AnalyticSets {
  int cstar = 0;
  NodeSet direct_surely;
  NodeSet direct_possibly;
  NodeSet hier_surely;
  NodeSet hier_possibly;
};

// Batch checker for one (base, relaxed, h2) triple. Owns the goal-rooted
// distance table for the relaxed space so per-instance checks cost one base
// sweep plus two bounded relaxed-space sweeps. h2 must be an algorithmic
// (stateless) heuristic; it is shared by the direct run, the hierarchy
// bottom and the analytic sets.
class DominationChecker {
 public:
  DominationChecker(std::shared_ptr<const core::ProblemSpace> base,
                    std::shared_ptr<const core::ProblemSpace> relaxed,
                    std::shared_ptr<core::Heuristic> h2, std::string chain);

  // cstar comes from an independent uniform-cost oracle. The actual direct
  // run switches to the Dijkstra-equivalent tie rule when h2 is the zero
  // heuristic, which is what the blind-search comparison claims describe.
  // `sets_out`, when given, receives the four analytic sets.
  DominationReport check(core::StateId instance, core::TieBreakRule tie,
                         bool cache, std::uint64_t budget,
                         AnalyticSets* sets_out = nullptr) const;

  const core::ProblemSpace& base() const { return *base_; }
  const core::ProblemSpace& relaxed() const { return *relaxed_; }
  core::Heuristic& h2() const { return *h2_; }

 private:
  std::shared_ptr<const core::ProblemSpace> base_;
  std::shared_ptr<const core::ProblemSpace> relaxed_;
  std::shared_ptr<core::Heuristic> h2_;
  std::string chain_;
  puzzle::DistanceTable relaxed_goal_dist_;
  bool h2_is_zero_;
};

// Single-shot form; builds a checker (including its distance table) per
// call. Batches should construct a DominationChecker once instead.
DominationReport check_domination(core::StateId instance,
                                  std::shared_ptr<const core::ProblemSpace> base,
                                  std::shared_ptr<const core::ProblemSpace> relaxed,
                                  std::shared_ptr<core::Heuristic> h2,
                                  core::TieBreakRule tie);

}  // namespace searchlab::analysis
