#include "analysis/domination.hpp"

#include <algorithm>

#include "core/search.hpp"
#include "core/uniform_cost.hpp"
#include "puzzle/board.hpp"
#include "puzzle/spaces.hpp"
#include "relax/heuristics.hpp"
#include "relax/hierarchy.hpp"

namespace searchlab::analysis {

namespace {

bool subset_of(const NodeSet& a, const NodeSet& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                       a.members.end());
}

}  // namespace

DominationChecker::DominationChecker(
    std::shared_ptr<const core::ProblemSpace> base,
    std::shared_ptr<const core::ProblemSpace> relaxed,
    std::shared_ptr<core::Heuristic> h2, std::string chain)
    : base_(std::move(base)),
      relaxed_(std::move(relaxed)),
      h2_(std::move(h2)),
      chain_(std::move(chain)),
      relaxed_goal_dist_(*relaxed_, puzzle::goal_id()),
      h2_is_zero_(relax::is_zero_heuristic(*h2_)) {}

DominationReport DominationChecker::check(core::StateId instance,
                                          core::TieBreakRule tie, bool cache,
                                          std::uint64_t budget,
                                          AnalyticSets* sets_out) const {
  DominationReport report;
  report.instance = instance;
  report.chain = chain_;
  report.cstar = core::oracle_optimal_cost(*base_, instance);

  const GStarMap gstar = gstar_map(*base_, instance, report.cstar);
  const auto& index = puzzle::permutation_index();
  AnalyticSets sets;
  sets.cstar = report.cstar;
  sets.direct_surely = direct_sets(*base_, gstar, *h2_, report.cstar, true);
  sets.direct_possibly = direct_sets(*base_, gstar, *h2_, report.cstar, false);
  sets.hier_surely = hier_sets(*base_, instance, gstar, *relaxed_,
                               relaxed_goal_dist_, index, *h2_, report.cstar,
                               true);
  sets.hier_possibly = hier_sets(*base_, instance, gstar, *relaxed_,
                                 relaxed_goal_dist_, index, *h2_, report.cstar,
                                 false);

  report.direct_surely = sets.direct_surely.members.size();
  report.direct_possibly = sets.direct_possibly.members.size();
  report.hier_surely = sets.hier_surely.members.size();
  report.hier_possibly = sets.hier_possibly.members.size();
  report.theorem1_holds = subset_of(sets.direct_surely, sets.hier_surely);
  report.theorem2_holds = subset_of(sets.direct_possibly, sets.hier_possibly);

  core::SearchOptions direct_options;
  direct_options.tie = h2_is_zero_ ? core::kDijkstraTie : tie;
  direct_options.expansion_budget = budget;
  core::ExpansionLedger direct_ledger;
  const core::SearchOutcome direct =
      core::astar(*base_, instance, *h2_, direct_options, &direct_ledger);

  relax::HierarchySpec spec;
  spec.chain = {base_, relaxed_};
  spec.bottom = h2_;
  spec.tie = tie;
  spec.cache = cache;
  core::ExpansionLedger hier_ledger;
  const core::SearchOutcome hier =
      relax::hierarchical_astar(spec, instance, hier_ledger, budget);

  if (direct.optimal_cost != report.cstar ||
      hier.optimal_cost != report.cstar) {
    throw core::SearchError(core::ErrorCode::kBadCstar,
                            "run cost disagrees with the oracle");
  }

  report.direct_total = direct_ledger.total();
  report.hier_total = hier_ledger.total();
  report.ratio = static_cast<double>(report.hier_total) /
                 static_cast<double>(report.direct_total);
  if (sets_out != nullptr) *sets_out = std::move(sets);
  return report;
}

DominationReport check_domination(
    core::StateId instance, std::shared_ptr<const core::ProblemSpace> base,
    std::shared_ptr<const core::ProblemSpace> relaxed,
    std::shared_ptr<core::Heuristic> h2, core::TieBreakRule tie) {
  const DominationChecker checker(std::move(base), std::move(relaxed),
                                  std::move(h2), "adhoc");
  return checker.check(instance, tie, /*cache=*/false, /*budget=*/0);
}

}  // namespace searchlab::analysis
