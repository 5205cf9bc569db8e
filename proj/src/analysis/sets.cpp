#include "analysis/sets.hpp"

#include <limits>
#include <queue>
#include <vector>

#include "core/uniform_cost.hpp"
#include "puzzle/board.hpp"
#include "puzzle/spaces.hpp"

namespace searchlab::analysis {

namespace {

void require_cstar(int cstar) {
  if (cstar < 0) {
    throw core::SearchError(core::ErrorCode::kBadCstar,
                            "cstar must be nonnegative");
  }
}

int heuristic_of(const core::ProblemSpace& space, core::Heuristic& h,
                 core::StateId s) {
  return space.is_goal(s) ? 0 : h.evaluate(s);
}

bool qualifies(int value, int cstar, bool strict) {
  return strict ? value < cstar : value <= cstar;
}

}  // namespace

GStarMap gstar_map(const core::ProblemSpace& space, core::StateId start,
                   int cstar) {
  require_cstar(cstar);
  return core::uniform_cost_map(space, start, cstar);
}

NodeSet direct_sets(const core::ProblemSpace& space, const GStarMap& gstar,
                    core::Heuristic& h, int cstar, bool strict) {
  require_cstar(cstar);
  NodeSet out{strict ? SetLabel::kSurely : SetLabel::kPossibly,
              SetLevel::kBase,
              {}};
  for (const auto& [n, g] : gstar) {
    if (qualifies(g + heuristic_of(space, h, n), cstar, strict)) {
      out.members.insert(n);
    }
  }
  return out;
}

NodeSet direct_sets(const core::ProblemSpace& space, core::StateId start,
                    core::Heuristic& h, int cstar, bool strict) {
  return direct_sets(space, gstar_map(space, start, cstar), h, cstar, strict);
}

NodeSet direct_sets(const core::ProblemSpace& space, core::Heuristic& h,
                    int cstar, bool strict) {
  return direct_sets(space, space.initial(), h, cstar, strict);
}

NodeSet hier_sets(const core::ProblemSpace& base, core::StateId start,
                  const GStarMap& gstar, const core::ProblemSpace& relaxed,
                  const puzzle::DistanceTable& relaxed_goal_dist,
                  const core::DenseStateIndex& index, core::Heuristic& h2,
                  int cstar, bool strict) {
  require_cstar(cstar);
  NodeSet out{strict ? SetLabel::kSurely : SetLabel::kPossibly,
              SetLevel::kUnion,
              {}};

  // Sweep sources carry offset cstar - h1(p); non-goal successors of
  // base-level members can sit one step past the table's cstar horizon, so
  // offsets may go (one) below zero, which the sweep handles fine.
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> label(index.size(), kInf);
  using QueueEntry = std::pair<int, std::uint32_t>;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>,
                      std::greater<QueueEntry>>
      open;
  auto add_source = [&](core::StateId p) {
    if (base.is_goal(p)) return;  // goals get h = 0 without evaluation
    const int offset = cstar - relaxed_goal_dist.at(p);
    const std::uint32_t rank = index.index_of(p);
    if (offset < label[rank]) {
      label[rank] = offset;
      open.push({offset, rank});
    }
  };

  // h1 evaluation happens under every tie-breaking rule at the start and at
  // every base-space successor of a base-level member (its predecessor is
  // expanded in every run). Base-level members are themselves covered: the
  // set is connected through the start along cheapest paths.
  add_source(start);
  std::vector<core::Edge> base_edges;
  for (const auto& [p, g] : gstar) {
    const int h1 = relaxed_goal_dist.at(p);
    if (!qualifies(g + h1, cstar, strict)) continue;
    out.members.insert(p);
    // Selecting a goal is the terminal expansion and generates nothing, so
    // goal members (non-strict only) contribute no successor sources.
    if (base.is_goal(p)) continue;
    base.successors(p, base_edges);
    for (const core::Edge& e : base_edges) add_source(e.to);
  }

  // D(m) = min_p [g*_relaxed(p, m) + cstar - h1(p)] over the sources;
  // D(m) + h2(m) < cstar (<= non-strict) iff some p's secondary set holds m.
  std::vector<core::Edge> edges;
  while (!open.empty()) {
    const auto [d, rank] = open.top();
    open.pop();
    if (d > label[rank]) continue;
    const core::StateId m = index.state_at(rank);
    if (qualifies(d + heuristic_of(relaxed, h2, m), cstar, strict)) {
      out.members.insert(m);
    }
    relaxed.successors(m, edges);
    for (const core::Edge& e : edges) {
      const int nd = d + e.cost;
      if (nd > cstar) continue;  // h2 >= 0: beyond this nothing qualifies
      const std::uint32_t nrank = index.index_of(e.to);
      if (nd < label[nrank]) {
        label[nrank] = nd;
        open.push({nd, nrank});
      }
    }
  }
  return out;
}

NodeSet hier_sets(const core::ProblemSpace& base, core::StateId start,
                  const core::ProblemSpace& relaxed,
                  const puzzle::DistanceTable& relaxed_goal_dist,
                  const core::DenseStateIndex& index, core::Heuristic& h2,
                  int cstar, bool strict) {
  return hier_sets(base, start, gstar_map(base, start, cstar), relaxed,
                   relaxed_goal_dist, index, h2, cstar, strict);
}

NodeSet hier_sets(const core::ProblemSpace& base,
                  const core::ProblemSpace& relaxed, core::Heuristic& h2,
                  int cstar, bool strict) {
  const puzzle::DistanceTable table(relaxed, puzzle::goal_id());
  return hier_sets(base, base.initial(), relaxed, table,
                   puzzle::permutation_index(), h2, cstar, strict);
}

}  // namespace searchlab::analysis
