#include "relax/hierarchy.hpp"

#include "relax/heuristics.hpp"

namespace searchlab::relax {

void HierarchySpec::validate() const {
  if (chain.empty()) {
    throw core::SearchError(core::ErrorCode::kBadArgument,
                            "hierarchy chain must not be empty");
  }
  for (const auto& space : chain) {
    if (space == nullptr) {
      throw core::SearchError(core::ErrorCode::kBadArgument,
                              "hierarchy chain has a null space");
    }
  }
  if (bottom == nullptr) {
    throw core::SearchError(core::ErrorCode::kBadArgument,
                            "hierarchy needs a bottom heuristic");
  }
}

core::SearchOutcome hierarchical_astar(const HierarchySpec& spec,
                                       core::StateId start,
                                       core::ExpansionLedger& ledger,
                                       std::uint64_t expansion_budget) {
  spec.validate();
  // Compose bottom-up: level i is estimated by searching level i + 1.
  std::shared_ptr<core::Heuristic> h = spec.bottom;
  for (std::size_t i = spec.chain.size(); i-- > 1;) {
    h = make_search_heuristic(spec.chain[i], std::move(h), spec.tie, &ledger,
                              spec.cache);
  }
  core::SearchOptions options;
  options.tie = spec.tie;
  options.expansion_budget = expansion_budget;
  return core::astar(*spec.chain.front(), start, *h, options, &ledger);
}

core::SearchOutcome hierarchical_astar(const HierarchySpec& spec,
                                       core::ExpansionLedger& ledger) {
  spec.validate();
  return hierarchical_astar(spec, spec.chain.front()->initial(), ledger);
}

}  // namespace searchlab::relax
