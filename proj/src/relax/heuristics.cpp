#include "relax/heuristics.hpp"

namespace searchlab::relax {

namespace detail {

class ConstantHeuristic final : public core::Heuristic {
 public:
  explicit ConstantHeuristic(int c) : value_(c) {
    if (c < 0) {
      throw core::SearchError(core::ErrorCode::kBadArgument,
                              "constant heuristic must be nonnegative");
    }
  }

  int evaluate(core::StateId) override { return value_; }
  Kind kind() const override { return Kind::kAlgorithmic; }
  int value() const { return value_; }

 private:
  int value_;
};

}  // namespace detail

namespace {
using detail::ConstantHeuristic;

class SearchBasedHeuristic final : public core::Heuristic {
 public:
  SearchBasedHeuristic(std::shared_ptr<const core::ProblemSpace> relaxed,
                       std::shared_ptr<core::Heuristic> inner,
                       core::TieBreakRule tie, core::ExpansionLedger* ledger,
                       bool cache)
      : relaxed_(std::move(relaxed)),
        inner_(std::move(inner)),
        tie_(tie),
        ledger_(ledger),
        use_cache_(cache) {}

  int evaluate(core::StateId s) override {
    if (use_cache_) {
      auto it = cache_.find(s);
      if (it != cache_.end()) return it->second;
    }
    // Deeper chain levels share this ledger, so the growth of
    // secondary_expansions during the sub-search is exactly their share.
    const std::uint64_t deeper_before =
        ledger_ != nullptr ? ledger_->secondary_expansions : 0;
    core::ExpansionLedger sub;
    core::SearchOptions options;
    options.tie = tie_;
    const core::SearchOutcome outcome =
        core::astar(*relaxed_, s, *inner_, options, &sub);
    if (ledger_ != nullptr) {
      const std::uint64_t deeper = ledger_->secondary_expansions - deeper_before;
      ledger_->secondary_expansions += sub.base_expansions;
      ledger_->per_call.emplace_back(s, sub.base_expansions + deeper);
    }
    if (use_cache_) cache_.emplace(s, outcome.optimal_cost);
    return outcome.optimal_cost;
  }

  Kind kind() const override { return Kind::kSearchBased; }

 private:
  std::shared_ptr<const core::ProblemSpace> relaxed_;
  std::shared_ptr<core::Heuristic> inner_;
  core::TieBreakRule tie_;
  core::ExpansionLedger* ledger_;
  bool use_cache_;
  std::unordered_map<core::StateId, int> cache_;
};

}  // namespace

std::unique_ptr<core::Heuristic> constant_heuristic(int c) {
  return std::make_unique<ConstantHeuristic>(c);
}

bool is_zero_heuristic(const core::Heuristic& h) {
  const auto* constant = dynamic_cast<const ConstantHeuristic*>(&h);
  return constant != nullptr && constant->value() == 0;
}

std::unique_ptr<core::Heuristic> make_search_heuristic(
    std::shared_ptr<const core::ProblemSpace> relaxed,
    std::shared_ptr<core::Heuristic> inner, core::TieBreakRule tie,
    core::ExpansionLedger* ledger, bool cache) {
  if (relaxed == nullptr || inner == nullptr) {
    throw core::SearchError(core::ErrorCode::kBadArgument,
                            "search heuristic needs a space and an inner heuristic");
  }
  return std::make_unique<SearchBasedHeuristic>(std::move(relaxed),
                                                std::move(inner), tie, ledger,
                                                cache);
}

}  // namespace searchlab::relax
