#include "core/uniform_cost.hpp"

#include <queue>
#include <vector>

namespace searchlab::core {

namespace {

struct QueueEntry {
  int g;
  std::uint64_t seq;
  StateId state;
};

struct Later {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.g != b.g) return a.g > b.g;
    return a.seq > b.seq;
  }
};

}  // namespace

std::unordered_map<StateId, int> uniform_cost_map(const ProblemSpace& space,
                                                  StateId start, int bound) {
  if (bound < 0) {
    throw SearchError(ErrorCode::kBadArgument, "negative bound");
  }
  std::unordered_map<StateId, int> dist;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, Later> queue;
  std::uint64_t seq = 0;
  dist.emplace(start, 0);
  queue.push(QueueEntry{0, seq++, start});

  std::vector<Edge> edges;
  while (!queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    auto it = dist.find(top.state);
    if (top.g > it->second) continue;  // stale
    space.successors(top.state, edges);
    for (const Edge& edge : edges) {
      const int g_new = top.g + edge.cost;
      if (g_new > bound) continue;
      auto [succ, inserted] = dist.try_emplace(edge.to, g_new);
      if (!inserted) {
        if (g_new >= succ->second) continue;
        succ->second = g_new;
      }
      queue.push(QueueEntry{g_new, seq++, edge.to});
    }
  }
  return dist;
}

int oracle_optimal_cost(const ProblemSpace& space, StateId start) {
  std::unordered_map<StateId, int> dist;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, Later> queue;
  std::uint64_t seq = 0;
  dist.emplace(start, 0);
  queue.push(QueueEntry{0, seq++, start});

  std::vector<Edge> edges;
  while (!queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    if (top.g > dist.at(top.state)) continue;
    if (space.is_goal(top.state)) return top.g;
    space.successors(top.state, edges);
    for (const Edge& edge : edges) {
      const int g_new = top.g + edge.cost;
      auto [succ, inserted] = dist.try_emplace(edge.to, g_new);
      if (!inserted) {
        if (g_new >= succ->second) continue;
        succ->second = g_new;
      }
      queue.push(QueueEntry{g_new, seq++, edge.to});
    }
  }
  throw SearchError(ErrorCode::kNoGoalReachable,
                    "no goal reachable from state " + std::to_string(start));
}

}  // namespace searchlab::core
