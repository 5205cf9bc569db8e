#include "core/properties.hpp"

namespace searchlab::core {

PropertyReport verify_heuristic_properties(
    const ProblemSpace& space, Heuristic& h, std::span<const StateId> samples,
    const std::unordered_map<StateId, int>& hstar) {
  PropertyReport report;
  std::vector<Edge> edges;
  for (const StateId state : samples) {
    const auto oracle = hstar.find(state);
    if (oracle == hstar.end()) {
      throw SearchError(ErrorCode::kOracleMissing,
                        "no h* entry for sampled state " + std::to_string(state));
    }
    const int value = h.evaluate(state);
    if (value > oracle->second) {
      report.admissibility.push_back({state, value, oracle->second});
    }
    space.successors(state, edges);
    for (const Edge& edge : edges) {
      const int succ_value = h.evaluate(edge.to);
      if (value > edge.cost + succ_value) {
        report.monotonicity.push_back({state, edge.to, value, edge.cost, succ_value});
      }
    }
  }
  return report;
}

}  // namespace searchlab::core
