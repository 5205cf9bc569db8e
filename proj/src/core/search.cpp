#include "core/search.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace searchlab::core {

const char* tie_break_name(TieBreakRule rule) {
  switch (rule) {
    case TieBreakRule::kFifo: return "FIFO";
    case TieBreakRule::kLifo: return "LIFO";
    case TieBreakRule::kHighG: return "HIGH_G";
    case TieBreakRule::kLowH: return "LOW_H";
    case TieBreakRule::kGoalFirst: return "GOAL_FIRST";
  }
  return "?";
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoGoalReachable: return "NO_GOAL_REACHABLE";
    case ErrorCode::kLimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::kReopenDetected: return "REOPEN_DETECTED";
    case ErrorCode::kOracleMissing: return "ORACLE_MISSING";
    case ErrorCode::kBadCstar: return "BAD_CSTAR";
    case ErrorCode::kBadArgument: return "BAD_ARGUMENT";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "?";
}

namespace {

struct OpenEntry {
  int f;
  int g;
  bool goal;
  std::uint64_t seq;
  StateId state;
};

// Returns true when `a` should be expanded after `b` (max-heap comparator).
// Ties on f are resolved by the rule; seq makes the order total.
struct LaterThan {
  TieBreakRule rule;

  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    switch (rule) {
      case TieBreakRule::kFifo:
        return a.seq > b.seq;
      case TieBreakRule::kLifo:
        return a.seq < b.seq;
      case TieBreakRule::kHighG:
        if (a.g != b.g) return a.g < b.g;
        return a.seq > b.seq;
      case TieBreakRule::kLowH:
        if (a.f - a.g != b.f - b.g) return (a.f - a.g) > (b.f - b.g);
        return a.seq > b.seq;
      case TieBreakRule::kGoalFirst:
        if (a.goal != b.goal) return !a.goal;
        if (a.g != b.g) return a.g < b.g;
        return a.seq > b.seq;
    }
    return a.seq > b.seq;
  }
};

struct NodeRecord {
  int g;
  int h;
  StateId parent;
  bool has_parent = false;
  bool closed = false;
};

}  // namespace

SearchOutcome astar(const ProblemSpace& space, StateId start, Heuristic& h,
                    const SearchOptions& options, ExpansionLedger* ledger) {
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, LaterThan> open(
      LaterThan{options.tie});
  std::unordered_map<StateId, NodeRecord> nodes;
  std::uint64_t seq = 0;
  std::uint64_t stale = 0;  // superseded entries still sitting in the heap

  const auto heuristic_of = [&](StateId s, bool goal) {
    if (goal) return 0;  // heuristics are 0 on goals; skip the evaluation
    const int value = h.evaluate(s);
    if (value < 0) {
      throw SearchError(ErrorCode::kBadArgument,
                        "negative heuristic value for state " + std::to_string(s));
    }
    return value;
  };

  SearchOutcome outcome;
  const bool start_goal = space.is_goal(start);
  const int start_h = heuristic_of(start, start_goal);
  nodes.emplace(start, NodeRecord{0, start_h, 0, false, false});
  open.push(OpenEntry{start_h, 0, start_goal, seq++, start});
  outcome.max_frontier = 1;

  std::vector<Edge> edges;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    NodeRecord& record = nodes.at(top.state);
    if (record.closed || top.g > record.g) {
      --stale;  // lazy deletion of a superseded entry
      continue;
    }

    if (options.expansion_budget != 0 &&
        outcome.expansion_count >= options.expansion_budget) {
      throw SearchError(ErrorCode::kLimitExceeded,
                        "expansion budget of " +
                            std::to_string(options.expansion_budget) + " hit");
    }

    record.closed = true;
    ++outcome.expansion_count;
    if (ledger != nullptr) ++ledger->base_expansions;
    outcome.expanded.push_back(ExpandedEntry{top.state, top.g, top.f});

    if (top.goal) {
      outcome.optimal_cost = top.g;
      StateId at = top.state;
      outcome.path.push_back(at);
      while (nodes.at(at).has_parent) {
        at = nodes.at(at).parent;
        outcome.path.push_back(at);
      }
      std::reverse(outcome.path.begin(), outcome.path.end());
      return outcome;
    }

    space.successors(top.state, edges);
    for (const Edge& edge : edges) {
      if (edge.cost < 0) {
        throw SearchError(ErrorCode::kBadArgument, "negative edge cost");
      }
      const int g_new = top.g + edge.cost;
      auto it = nodes.find(edge.to);
      if (it == nodes.end()) {
        const bool goal = space.is_goal(edge.to);
        const int h_new = heuristic_of(edge.to, goal);
        nodes.emplace(edge.to, NodeRecord{g_new, h_new, top.state, true, false});
        open.push(OpenEntry{g_new + h_new, g_new, goal, seq++, edge.to});
      } else if (g_new < it->second.g) {
        if (it->second.closed) {
          throw SearchError(ErrorCode::kReopenDetected,
                            "better path to closed state " +
                                std::to_string(edge.to) +
                                " (heuristic is not monotone)");
        }
        it->second.g = g_new;
        it->second.parent = top.state;
        it->second.has_parent = true;
        ++stale;
        open.push(OpenEntry{g_new + it->second.h, g_new,
                            space.is_goal(edge.to), seq++, edge.to});
      }
    }
    outcome.max_frontier =
        std::max<std::uint64_t>(outcome.max_frontier, open.size() - stale);
  }

  throw SearchError(ErrorCode::kNoGoalReachable,
                    "frontier exhausted without reaching a goal");
}

SearchOutcome astar(const ProblemSpace& space, Heuristic& h,
                    const SearchOptions& options, ExpansionLedger* ledger) {
  return astar(space, space.initial(), h, options, ledger);
}

}  // namespace searchlab::core
