#include "relax/heuristics.hpp"
#include "relax/hierarchy.hpp"

#include <memory>

#include "doctest.h"
#include "fixtures.hpp"
#include "core/uniform_cost.hpp"
#include "puzzle/board.hpp"
#include "puzzle/heuristics.hpp"
#include "puzzle/scramble.hpp"

using namespace searchlab;

TEST_CASE("constant heuristics evaluate to their constant") {
  const auto zero = relax::constant_heuristic(0);
  const auto three = relax::constant_heuristic(3);
  for (const auto s : testing::solvable_samples(61, 10)) {
    CHECK(zero->evaluate(s) == 0);
    CHECK(three->evaluate(s) == 3);
  }
  CHECK(zero->kind() == core::Heuristic::Kind::kAlgorithmic);
  CHECK(relax::is_zero_heuristic(*zero));
  CHECK_FALSE(relax::is_zero_heuristic(*three));
  puzzle::MdHeuristic md;
  CHECK_FALSE(relax::is_zero_heuristic(md));
}

TEST_CASE("search heuristic: goal evaluates to zero in one expansion") {
  core::ExpansionLedger ledger;
  const auto h = relax::make_search_heuristic(
      testing::checkra_space(), std::make_shared<puzzle::RaExactHeuristic>(),
      core::TieBreakRule::kFifo, &ledger, /*cache=*/false);
  CHECK(h->kind() == core::Heuristic::Kind::kSearchBased);
  CHECK(h->evaluate(puzzle::goal_id()) == 0);
  REQUIRE(ledger.per_call.size() == 1);
  CHECK(ledger.per_call[0].first == puzzle::goal_id());
  CHECK(ledger.per_call[0].second == 1);
  CHECK(ledger.secondary_expansions == 1);
}

TEST_CASE("search over the identity relaxation computes exact goal distance") {
  core::ExpansionLedger ledger;
  const auto h = relax::make_search_heuristic(
      testing::base_space(), std::make_shared<puzzle::MdHeuristic>(),
      core::TieBreakRule::kFifo, &ledger, /*cache=*/false);
  for (const auto s : testing::solvable_samples(62, 12)) {
    CHECK(h->evaluate(s) == testing::base_goal_table().at(s));
  }
}

TEST_CASE("search over check-RA matches its breadth-first distances") {
  core::ExpansionLedger ledger;
  const auto h = relax::make_search_heuristic(
      testing::checkra_space(), std::make_shared<puzzle::RaExactHeuristic>(),
      core::TieBreakRule::kFifo, &ledger, /*cache=*/false);
  const core::StateId fixed = puzzle::scramble(77, 18).state;
  CHECK(h->evaluate(fixed) == testing::checkra_goal_table().at(fixed));
  for (const auto s : testing::solvable_samples(63, 12)) {
    CHECK(h->evaluate(s) == testing::checkra_goal_table().at(s));
  }
}

TEST_CASE("caching repeats answers without charging new expansions") {
  core::ExpansionLedger ledger;
  const auto h = relax::make_search_heuristic(
      testing::checkra_space(), std::make_shared<puzzle::RaExactHeuristic>(),
      core::TieBreakRule::kFifo, &ledger, /*cache=*/true);
  const core::StateId s = puzzle::scramble(78, 14).state;
  const int first = h->evaluate(s);
  const auto spent = ledger.secondary_expansions;
  CHECK(spent > 0);
  CHECK(h->evaluate(s) == first);
  CHECK(ledger.secondary_expansions == spent);
  CHECK(h->kind() == core::Heuristic::Kind::kSearchBased);
}

TEST_CASE("a one-level hierarchy is plain A*") {
  const core::StateId start = puzzle::scramble(79, 12).state;
  const auto space = puzzle::make_space(puzzle::Variant::kBase, start);

  relax::HierarchySpec spec;
  spec.chain = {space};
  spec.bottom = std::make_shared<puzzle::MdHeuristic>();
  spec.tie = core::TieBreakRule::kHighG;
  core::ExpansionLedger ledger;
  const auto hier = relax::hierarchical_astar(spec, ledger);

  puzzle::MdHeuristic md;
  core::SearchOptions options;
  options.tie = core::TieBreakRule::kHighG;
  const auto direct = core::astar(*space, start, md, options);

  CHECK(hier.optimal_cost == direct.optimal_cost);
  CHECK(hier.expansion_count == direct.expansion_count);
  REQUIRE(hier.expanded.size() == direct.expanded.size());
  for (size_t i = 0; i < hier.expanded.size(); ++i) {
    CHECK(hier.expanded[i].state == direct.expanded[i].state);
  }
  CHECK(ledger.base_expansions == hier.expansion_count);
  CHECK(ledger.secondary_expansions == 0);
}

TEST_CASE("a one-level hierarchy with a zero bottom is blind search") {
  const core::StateId start = puzzle::scramble(80, 8).state;
  relax::HierarchySpec spec;
  spec.chain = {testing::base_space()};
  spec.bottom = relax::constant_heuristic(0);
  core::ExpansionLedger ledger;
  const auto outcome = relax::hierarchical_astar(spec, start, ledger);
  CHECK(outcome.optimal_cost ==
        core::oracle_optimal_cost(*testing::base_space(), start));
}

TEST_CASE("two-level hierarchy stays optimal and books every expansion") {
  const core::StateId start = puzzle::scramble(81, 14).state;
  relax::HierarchySpec spec;
  spec.chain = {testing::base_space(), testing::checkra_space()};
  spec.bottom = std::make_shared<puzzle::RaExactHeuristic>();
  core::ExpansionLedger ledger;
  const auto outcome = relax::hierarchical_astar(spec, start, ledger);

  puzzle::MdHeuristic md;
  const auto reference = core::astar(*testing::base_space(), start, md, {});
  CHECK(outcome.optimal_cost == reference.optimal_cost);

  CHECK(ledger.base_expansions == outcome.expansion_count);
  std::uint64_t charged = 0;
  for (const auto& [state, cost] : ledger.per_call) charged += cost;
  CHECK(charged == ledger.secondary_expansions);
  CHECK(ledger.total() ==
        ledger.base_expansions + ledger.secondary_expansions);
  CHECK(ledger.secondary_expansions > 0);
}

TEST_CASE("hierarchy caching keeps the cost and trims secondary work") {
  const core::StateId start = puzzle::scramble(82, 14).state;
  relax::HierarchySpec spec;
  spec.chain = {testing::base_space(), testing::checkra_space()};
  spec.bottom = std::make_shared<puzzle::RaExactHeuristic>();

  core::ExpansionLedger plain;
  const auto without = relax::hierarchical_astar(spec, start, plain);
  spec.cache = true;
  core::ExpansionLedger cached;
  const auto with = relax::hierarchical_astar(spec, start, cached);

  CHECK(with.optimal_cost == without.optimal_cost);
  CHECK(cached.secondary_expansions <= plain.secondary_expansions);
}

TEST_CASE("hierarchy budgets and validation reject bad runs") {
  relax::HierarchySpec spec;
  CHECK(testing::thrown_code([&] { spec.validate(); }) ==
        core::ErrorCode::kBadArgument);

  spec.chain = {testing::base_space(), testing::checkra_space()};
  spec.bottom = std::make_shared<puzzle::RaExactHeuristic>();
  core::ExpansionLedger ledger;
  const core::StateId start = puzzle::scramble(83, 12).state;
  CHECK(testing::thrown_code([&] {
          relax::hierarchical_astar(spec, start, ledger, /*budget=*/2);
        }) == core::ErrorCode::kLimitExceeded);
}
