#include "analysis/domination.hpp"
#include "analysis/xy_bench.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "core/search.hpp"
#include "puzzle/board.hpp"
#include "puzzle/heuristics.hpp"
#include "puzzle/scramble.hpp"
#include "puzzle/spaces.hpp"
#include "relax/heuristics.hpp"

using namespace searchlab;
using searchlab::core::TieBreakRule;

namespace {

const analysis::DominationChecker& checkra_checker() {
  static const analysis::DominationChecker checker(
      testing::base_space(), testing::checkra_space(),
      std::make_shared<puzzle::RaExactHeuristic>(), "BASE-CHECKRA-RA");
  return checker;
}

}  // namespace

TEST_CASE("the goal instance verifies trivially") {
  const auto checker = checkra_checker();
  analysis::AnalyticSets sets;
  const auto report = checker.check(puzzle::goal_id(), TieBreakRule::kFifo,
                                    false, 0, &sets);
  CHECK(report.cstar == 0);
  CHECK(report.theorem1_holds);
  CHECK(report.theorem2_holds);
  CHECK(report.direct_surely == 0);
  CHECK(report.direct_possibly == 1);
  CHECK(report.hier_surely == 0);
  CHECK(report.hier_possibly == 1);
  CHECK(report.direct_total == 1);
  CHECK(report.hier_total == 1);
  CHECK(report.ratio == doctest::Approx(1.0));
  CHECK(sets.direct_possibly.members ==
        std::set<core::StateId>{puzzle::goal_id()});
  CHECK(sets.hier_surely.members.empty());
}

TEST_CASE("seeded instances satisfy both containments and the sandwich") {
  const auto checker = checkra_checker();
  puzzle::RaExactHeuristic ra;
  for (const std::uint64_t seed : {201ULL, 202ULL}) {
    const core::StateId instance = puzzle::scramble(seed, 14).state;
    analysis::AnalyticSets sets;
    const auto report = checker.check(instance, TieBreakRule::kFifo, false, 0,
                                      &sets);
    CHECK(report.theorem1_holds);
    CHECK(report.theorem2_holds);
    CHECK(report.direct_surely <= report.hier_surely);
    CHECK(report.direct_possibly <= report.hier_possibly);
    CHECK(report.cstar == testing::base_goal_table().at(instance));
    CHECK(report.ratio ==
          doctest::Approx(static_cast<double>(report.hier_total) /
                          static_cast<double>(report.direct_total)));

    for (const TieBreakRule tie :
         {TieBreakRule::kFifo, TieBreakRule::kLifo, TieBreakRule::kHighG,
          TieBreakRule::kLowH, TieBreakRule::kGoalFirst}) {
      core::SearchOptions options;
      options.tie = tie;
      const auto run = core::astar(*testing::base_space(), instance, ra,
                                   options);
      std::set<core::StateId> expanded;
      for (const auto& e : run.expanded) expanded.insert(e.state);
      CHECK(std::includes(expanded.begin(), expanded.end(),
                          sets.direct_surely.members.begin(),
                          sets.direct_surely.members.end()));
      CHECK(std::includes(sets.direct_possibly.members.begin(),
                          sets.direct_possibly.members.end(),
                          expanded.begin(), expanded.end()));
    }
  }
}

TEST_CASE("blind bottoms make the direct run a dijkstra lower bound") {
  const analysis::DominationChecker checker(
      testing::base_space(), testing::ra_space(), relax::constant_heuristic(0),
      "BASE-RA-ZERO");
  for (const std::uint64_t seed : {203ULL, 204ULL}) {
    const core::StateId instance = puzzle::scramble(seed, 8).state;
    analysis::AnalyticSets sets;
    // The requested tie rule is overridden for the direct run so the blind
    // comparison measures Dijkstra, not a tie-break accident.
    const auto report = checker.check(instance, TieBreakRule::kLifo, false, 0,
                                      &sets);
    CHECK(report.theorem1_holds);
    CHECK(report.theorem2_holds);
    CHECK(report.direct_total <= report.hier_total);
    CHECK(report.direct_total == report.direct_surely + 1);
  }
}

TEST_CASE("budgets propagate out of the checker") {
  const auto checker = checkra_checker();
  const core::StateId instance = puzzle::scramble(205, 12).state;
  CHECK(testing::thrown_code([&] {
          checker.check(instance, TieBreakRule::kFifo, false, /*budget=*/1);
        }) == core::ErrorCode::kLimitExceeded);
}

TEST_CASE("single-shot checks agree with the batch checker") {
  const core::StateId instance = puzzle::scramble(206, 10).state;
  const auto single = analysis::check_domination(
      instance, testing::base_space(), testing::checkra_space(),
      std::make_shared<puzzle::RaExactHeuristic>(), TieBreakRule::kFifo);
  const auto batch = checkra_checker().check(instance, TieBreakRule::kFifo,
                                             false, 0);
  CHECK(single.theorem1_holds);
  CHECK(single.cstar == batch.cstar);
  CHECK(single.direct_surely == batch.direct_surely);
  CHECK(single.hier_possibly == batch.hier_possibly);
  CHECK(single.direct_total == batch.direct_total);
}

TEST_CASE("xy benchmark on the goal is the unit row") {
  const auto report = analysis::xy_benchmark({puzzle::goal_id()},
                                             TieBreakRule::kFifo, 0);
  REQUIRE(report.rows.size() == 1);
  const auto& row = report.rows[0];
  CHECK(row.depth == 0);
  CHECK(row.md_total == 1);
  CHECK(row.xy_total == 1);
  CHECK(row.xy_secondary == 0);  // goal selection never evaluates h
  CHECK(row.ratio == doctest::Approx(1.0));
  CHECK(report.median_ratio == doctest::Approx(1.0));
  CHECK_FALSE(report.note.empty());
}

TEST_CASE("xy benchmark accounting on a scrambled instance") {
  const core::StateId instance = puzzle::scramble(207, 18).state;
  const auto report = analysis::xy_benchmark({puzzle::goal_id(), instance},
                                             TieBreakRule::kFifo, 0);
  REQUIRE(report.rows.size() == 2);
  const auto& row = report.rows[1];
  CHECK(row.instance_index == 1);
  CHECK(row.instance == instance);
  CHECK(row.depth == testing::base_goal_table().at(instance));
  CHECK(row.md_total == row.md_base);
  CHECK(row.xy_total == row.xy_base + row.xy_secondary);
  CHECK(row.xy_base <= row.md_base);  // xy dominates md pointwise
  CHECK(row.xy_secondary > 0);
  CHECK(row.ratio == doctest::Approx(static_cast<double>(row.xy_total) /
                                     static_cast<double>(row.md_total)));
  const double mid = (report.rows[0].ratio + report.rows[1].ratio) / 2.0;
  CHECK(report.median_ratio == doctest::Approx(mid));
}
