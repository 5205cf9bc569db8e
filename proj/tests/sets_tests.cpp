#include "analysis/sets.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "doctest.h"
#include "fixtures.hpp"
#include "core/uniform_cost.hpp"
#include "puzzle/board.hpp"
#include "puzzle/heuristics.hpp"
#include "puzzle/scramble.hpp"
#include "puzzle/spaces.hpp"
#include "relax/heuristics.hpp"

using namespace searchlab;
using analysis::NodeSet;

namespace {

// Hand-rolled breadth-first g* sweep over legal blank slides, sharing no
// code with the uniform-cost oracle or the spaces' successor tables.
std::unordered_map<core::StateId, int> bfs_gstar(core::StateId start,
                                                 int bound) {
  std::unordered_map<core::StateId, int> dist{{start, 0}};
  std::deque<core::StateId> queue{start};
  while (!queue.empty()) {
    const core::StateId id = queue.front();
    queue.pop_front();
    const int g = dist.at(id);
    if (g == bound) continue;
    const puzzle::Cells cells = puzzle::unpack(id);
    const int blank = puzzle::blank_position(cells);
    const int row = blank / 3;
    const int col = blank % 3;
    const int moves[4][2] = {{row - 1, col}, {row + 1, col},
                             {row, col - 1}, {row, col + 1}};
    for (const auto& m : moves) {
      if (m[0] < 0 || m[0] > 2 || m[1] < 0 || m[1] > 2) continue;
      puzzle::Cells next = cells;
      std::swap(next[static_cast<size_t>(blank)],
                next[static_cast<size_t>(m[0] * 3 + m[1])]);
      const core::StateId nid = puzzle::pack(next);
      if (dist.emplace(nid, g + 1).second) queue.push_back(nid);
    }
  }
  return dist;
}

// The per-source definition of the hierarchical union, one bounded sweep per
// evaluated node, as a check on the production multi-source sweep.
std::set<core::StateId> naive_hier_union(const core::ProblemSpace& base,
                                         core::StateId start,
                                         const core::ProblemSpace& relaxed,
                                         core::Heuristic& h2, int cstar,
                                         bool strict) {
  const auto& h1_table = testing::checkra_goal_table();
  auto qualifies = [&](int value, int limit) {
    return strict ? value < limit : value <= limit;
  };
  auto h2_of = [&](core::StateId s) {
    return relaxed.is_goal(s) ? 0 : h2.evaluate(s);
  };

  std::set<core::StateId> members;
  std::set<core::StateId> evaluated;
  if (!base.is_goal(start)) evaluated.insert(start);
  std::vector<core::Edge> edges;
  for (const auto& [p, g] : core::uniform_cost_map(base, start, cstar)) {
    if (!qualifies(g + h1_table.at(p), cstar)) continue;
    members.insert(p);
    if (base.is_goal(p)) continue;
    base.successors(p, edges);
    for (const core::Edge& e : edges) {
      if (!base.is_goal(e.to)) evaluated.insert(e.to);
    }
  }
  for (const core::StateId p : evaluated) {
    const int h1 = h1_table.at(p);
    for (const auto& [m, g] : core::uniform_cost_map(relaxed, p, h1)) {
      if (qualifies(g + h2_of(m), h1)) members.insert(m);
    }
  }
  return members;
}

}  // namespace

TEST_CASE("direct sets at the goal: strict empty, non-strict just the goal") {
  puzzle::MdHeuristic md;
  const auto strict =
      analysis::direct_sets(*testing::base_space(), md, 0, true);
  CHECK(strict.members.empty());
  CHECK(strict.label == analysis::SetLabel::kSurely);
  CHECK(strict.level == analysis::SetLevel::kBase);
  const auto loose =
      analysis::direct_sets(*testing::base_space(), md, 0, false);
  CHECK(loose.members == std::set<core::StateId>{puzzle::goal_id()});
  CHECK(loose.label == analysis::SetLabel::kPossibly);
}

TEST_CASE("blind direct sets are exactly the g* balls") {
  const core::StateId start = puzzle::scramble(90, 12).state;
  const int cstar = testing::base_goal_table().at(start);
  const auto zero = relax::constant_heuristic(0);
  const auto strict =
      analysis::direct_sets(*testing::base_space(), start, *zero, cstar, true);
  const auto loose = analysis::direct_sets(*testing::base_space(), start,
                                           *zero, cstar, false);
  std::set<core::StateId> lt, le;
  for (const auto& [s, g] : bfs_gstar(start, cstar)) {
    if (g < cstar) lt.insert(s);
    le.insert(s);
  }
  CHECK(strict.members == lt);
  CHECK(loose.members == le);
}

TEST_CASE("direct sets match a brute-force enumeration under MD") {
  for (const std::uint64_t seed : {91ULL, 92ULL}) {
    const core::StateId start = puzzle::scramble(seed, 12).state;
    const int cstar = testing::base_goal_table().at(start);
    puzzle::MdHeuristic md;

    std::set<core::StateId> expect_strict, expect_loose;
    for (const auto& [s, g] : bfs_gstar(start, cstar)) {
      const int h = testing::base_space()->is_goal(s) ? 0 : puzzle::md(s);
      if (g + h < cstar) expect_strict.insert(s);
      if (g + h <= cstar) expect_loose.insert(s);
    }

    const auto strict = analysis::direct_sets(*testing::base_space(), start,
                                              md, cstar, true);
    const auto loose = analysis::direct_sets(*testing::base_space(), start,
                                             md, cstar, false);
    CHECK(strict.members == expect_strict);
    CHECK(loose.members == expect_loose);
    CHECK(std::includes(loose.members.begin(), loose.members.end(),
                        strict.members.begin(), strict.members.end()));
  }
}

TEST_CASE("negative cstar is rejected") {
  puzzle::MdHeuristic md;
  CHECK(testing::thrown_code([&] {
          analysis::direct_sets(*testing::base_space(), md, -1, true);
        }) == core::ErrorCode::kBadCstar);
}

TEST_CASE("hierarchical sets at the goal") {
  puzzle::RaExactHeuristic ra;
  const auto strict = analysis::hier_sets(*testing::base_space(),
                                          *testing::checkra_space(), ra, 0,
                                          true);
  CHECK(strict.members.empty());
  CHECK(strict.level == analysis::SetLevel::kUnion);
  // The goal qualifies at the boundary but its selection terminates the
  // search, so no secondary search is charged.
  const auto loose = analysis::hier_sets(*testing::base_space(),
                                         *testing::checkra_space(), ra, 0,
                                         false);
  CHECK(loose.members == std::set<core::StateId>{puzzle::goal_id()});
}

TEST_CASE("identity relaxation with h* as both levels: strict union is the "
          "h*-guided base set") {
  const core::StateId start = puzzle::scramble(93, 10).state;
  const int cstar = testing::base_goal_table().at(start);
  testing::TableHeuristic hstar(testing::base_goal_table());

  const auto base_with_initial = puzzle::make_space(puzzle::Variant::kBase,
                                                    start);
  const auto union_set = analysis::hier_sets(*base_with_initial,
                                             *testing::base_space(), hstar,
                                             cstar, true);
  const auto direct = analysis::direct_sets(*base_with_initial, hstar, cstar,
                                            true);
  // With h1 = h* exact, every secondary set is empty: along any path
  // g(p, m) + h*(m) >= h*(p) by the triangle inequality.
  CHECK(union_set.members == direct.members);
}

TEST_CASE("multi-source sweep equals the per-source union") {
  puzzle::RaExactHeuristic ra;
  for (const std::uint64_t seed : {94ULL, 95ULL}) {
    const core::StateId start = puzzle::scramble(seed, 6).state;
    const int cstar = testing::base_goal_table().at(start);
    for (const bool strict : {true, false}) {
      const auto got = analysis::hier_sets(
          *testing::base_space(), start,
          *testing::checkra_space(), testing::checkra_goal_table(),
          puzzle::permutation_index(), ra, cstar, strict);
      const auto want =
          naive_hier_union(*testing::base_space(), start,
                           *testing::checkra_space(), ra, cstar, strict);
      CHECK(got.members == want);
    }
  }
}

TEST_CASE("the hierarchical union swallows the direct set (containments)") {
  puzzle::RaExactHeuristic ra;
  for (const std::uint64_t seed : {96ULL, 97ULL, 98ULL}) {
    const core::StateId start = puzzle::scramble(seed, 14).state;
    const int cstar = testing::base_goal_table().at(start);
    const auto gstar = analysis::gstar_map(*testing::base_space(), start,
                                           cstar);
    for (const bool strict : {true, false}) {
      const auto direct = analysis::direct_sets(*testing::base_space(), gstar,
                                                ra, cstar, strict);
      const auto hier = analysis::hier_sets(
          *testing::base_space(), start, gstar, *testing::checkra_space(),
          testing::checkra_goal_table(), puzzle::permutation_index(), ra,
          cstar, strict);
      CHECK(std::includes(hier.members.begin(), hier.members.end(),
                          direct.members.begin(), direct.members.end()));
    }
  }
}

TEST_CASE("relaxed optimal cost sits between h2 and h*") {
  for (const auto s : testing::solvable_samples(99, 200)) {
    const int h1 = testing::checkra_goal_table().at(s);
    CHECK(puzzle::ra_exact(s) <= h1);
    CHECK(h1 <= testing::base_goal_table().at(s));
    CHECK(puzzle::md(s) <= testing::base_goal_table().at(s));
  }
}
