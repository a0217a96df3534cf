#include "formation/planner.hpp"

#include <algorithm>

namespace formation {

PlanResult plan(const Instance& instance, bool compress_departures) {
  PlanResult result;
  auto matrix = distance_matrix(instance);
  result.assignment = hungarian(matrix);
  PathSet raw = extract_paths(instance, result.assignment);
  result.ordered = order_paths(raw);
  result.schedule =
      compress_departures ? compress(result.ordered) : sequential_schedule(result.ordered);

  result.metrics.makespan = result.schedule.makespan;
  result.metrics.total_distance = result.schedule.total_distance;
  int worst = 0;
  for (const auto& row : matrix) {
    for (int d : row) worst = std::max(worst, d);
  }
  result.metrics.max_start_goal_distance = worst;
  result.metrics.makespan_bound = instance.agent_count() + worst - 1;
  return result;
}

}  // namespace formation
