#pragma once

#include <set>
#include <unordered_map>

#include "core/heuristic.hpp"
#include "core/problem_space.hpp"
#include "core/types.hpp"
#include "puzzle/tables.hpp"

namespace searchlab::analysis {

enum class SetLabel { kSurely, kPossibly };
enum class SetLevel { kBase, kSecondary, kUnion };

// Tie-break-independent expansion tier. SURELY members are expanded by A*
// under every tie-breaking rule, POSSIBLY members under at least one.
struct NodeSet {
  SetLabel label;
  SetLevel level;
  std::set<core::StateId> members;
};

// Exact g* values of every state with g* <= cstar, from the uniform-cost
// oracle. All set computations below accept one shared map so a batch
// checker sweeps the base space once per instance.
using GStarMap = std::unordered_map<core::StateId, int>;
GStarMap gstar_map(const core::ProblemSpace& space, core::StateId start,
                   int cstar);

// {n reachable : g*(n) + h(n) < cstar} for strict (SURELY), <= for
// non-strict (POSSIBLY). g* comes from the uniform-cost oracle, never from
// an A* run. Goal states contribute h = 0 without an evaluate() call,
// matching the engine. Throws kBadCstar for negative cstar.
NodeSet direct_sets(const core::ProblemSpace& space, const GStarMap& gstar,
                    core::Heuristic& h, int cstar, bool strict);

NodeSet direct_sets(const core::ProblemSpace& space, core::StateId start,
                    core::Heuristic& h, int cstar, bool strict);

// Start taken from space.initial().
NodeSet direct_sets(const core::ProblemSpace& space, core::Heuristic& h,
                    int cstar, bool strict);

// Union of the base-level set S = {p : g*(p) + h1(p) < cstar} and the
// secondary sets {m : g*_relaxed(p, m) + h2(m) < h1(p)} (<= in both places
// for non-strict), where h1(p) is the exact relaxed optimal cost.
//
// The secondary sets range over every p whose h1 evaluation happens under
// every tie-breaking rule: the start plus all base-space successors of S
// members (minus goal states, which are never evaluated). S itself is
// covered — it is connected through the start. Attaching them to S alone
// would be too small: the containment proofs hinge on the first node of a
// cheapest path that lies just OUTSIDE S, whose evaluation is still
// guaranteed because its predecessor is in S.
//
// h1 is read from `relaxed_goal_dist`, a goal-rooted uniform-cost table,
// which equals cost-to-goal because every in-scope space is undirected (a
// tested invariant). The secondary union is computed by one multi-source
// sweep over `relaxed` with per-source offset cstar - h1(p): the resulting
// label D(m) = min_p [g*_relaxed(p, m) + cstar - h1(p)] makes membership
// D(m) + h2(m) < cstar (<= non-strict), equivalent to the per-p union.
// `index` must cover every state the sweep can reach.
NodeSet hier_sets(const core::ProblemSpace& base, core::StateId start,
                  const GStarMap& gstar, const core::ProblemSpace& relaxed,
                  const puzzle::DistanceTable& relaxed_goal_dist,
                  const core::DenseStateIndex& index, core::Heuristic& h2,
                  int cstar, bool strict);

NodeSet hier_sets(const core::ProblemSpace& base, core::StateId start,
                  const core::ProblemSpace& relaxed,
                  const puzzle::DistanceTable& relaxed_goal_dist,
                  const core::DenseStateIndex& index, core::Heuristic& h2,
                  int cstar, bool strict);

// Eight-Puzzle convenience: builds the goal-rooted table for `relaxed` on
// the fly and uses the shared permutation index; start = base.initial().
NodeSet hier_sets(const core::ProblemSpace& base,
                  const core::ProblemSpace& relaxed, core::Heuristic& h2,
                  int cstar, bool strict);

}  // namespace searchlab::analysis
