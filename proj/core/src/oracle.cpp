#include "formation/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <vector>

#include "formation/assignment.hpp"
#include "formation/errors.hpp"

namespace formation {

namespace {

constexpr int kMaxJointAgents = 3;
constexpr int kMaxJointVertices = 12;

void require_joint_limits(const Instance& instance) {
  if (instance.agent_count() > kMaxJointAgents) {
    throw Error(ErrorCode::TooLarge, std::to_string(instance.agent_count()) +
                                         " agents exceeds the joint-search limit of " +
                                         std::to_string(kMaxJointAgents));
  }
  if (instance.graph.vertex_count > kMaxJointVertices) {
    throw Error(ErrorCode::TooLarge, std::to_string(instance.graph.vertex_count) +
                                         " vertices exceeds the joint-search limit of " +
                                         std::to_string(kMaxJointVertices));
  }
}

std::uint32_t encode(const std::vector<int>& sorted_pos, int vertex_count) {
  std::uint32_t key = 0;
  for (int v : sorted_pos) key = key * static_cast<std::uint32_t>(vertex_count) + v;
  return key;
}

std::vector<int> decode(std::uint32_t key, int vertex_count, int n) {
  std::vector<int> pos(n);
  for (int k = n - 1; k >= 0; --k) {
    pos[k] = static_cast<int>(key % vertex_count);
    key /= vertex_count;
  }
  return pos;
}

// Enumerates every legal synchronous step from `pos` (each agent stays or
// crosses one edge, no two agents on one vertex, no pair swapping an edge)
// and hands the callback the target tuple plus how many agents moved.
template <typename Fn>
void for_each_joint_move(const Graph& graph, const std::vector<int>& pos, Fn&& fn) {
  const int n = static_cast<int>(pos.size());
  std::vector<int> targets(n);
  auto step = [&](auto&& self, int k, int moved) -> void {
    if (k == n) {
      fn(targets, moved);
      return;
    }
    auto attempt = [&](int to) {
      for (int j = 0; j < k; ++j) {
        if (targets[j] == to) return;                          // meet
        if (targets[j] == pos[k] && to == pos[j]) return;      // head-on swap
      }
      targets[k] = to;
      self(self, k + 1, moved + (to != pos[k]));
    };
    attempt(pos[k]);
    for (int to : graph.adjacency[pos[k]]) attempt(to);
  };
  step(step, 0, 0);
}

}  // namespace

std::int64_t oracle_min_total_distance(const Instance& instance) {
  if (instance.agent_count() > 8) {
    throw Error(ErrorCode::TooLarge, std::to_string(instance.agent_count()) +
                                         " agents exceeds the exhaustive limit of 8");
  }
  return oracle_min_assignment(distance_matrix(instance));
}

int oracle_min_makespan(const Instance& instance) {
  require_joint_limits(instance);
  const Graph& graph = instance.graph;
  const int V = graph.vertex_count;
  const int n = instance.agent_count();

  std::uint32_t space = 1;
  for (int k = 0; k < n; ++k) space *= static_cast<std::uint32_t>(V);

  std::vector<int> start = instance.starts;
  std::vector<int> goal = instance.goals;
  std::sort(start.begin(), start.end());
  std::sort(goal.begin(), goal.end());
  const std::uint32_t goal_key = encode(goal, V);

  std::vector<int> dist(space, -1);
  std::deque<std::uint32_t> queue;
  std::uint32_t start_key = encode(start, V);
  dist[start_key] = 0;
  queue.push_back(start_key);
  while (!queue.empty()) {
    std::uint32_t key = queue.front();
    queue.pop_front();
    if (key == goal_key) return dist[key];
    std::vector<int> pos = decode(key, V, n);
    for_each_joint_move(graph, pos, [&](std::vector<int> targets, int) {
      std::sort(targets.begin(), targets.end());
      std::uint32_t next = encode(targets, V);
      if (dist[next] < 0) {
        dist[next] = dist[key] + 1;
        queue.push_back(next);
      }
    });
  }
  throw Error(ErrorCode::InvariantViolation, "goal configuration unreachable");
}

int oracle_min_makespan_distance_optimal(const Instance& instance) {
  require_joint_limits(instance);
  const Graph& graph = instance.graph;
  const int V = graph.vertex_count;
  const int n = instance.agent_count();
  const std::int64_t budget = oracle_min_total_distance(instance);

  std::vector<int> start = instance.starts;
  std::vector<int> goal = instance.goals;
  std::sort(start.begin(), start.end());
  std::sort(goal.begin(), goal.end());
  const std::uint32_t goal_pos_key = encode(goal, V);

  // dist from every goal, for the admissible remaining-moves bound
  std::vector<std::vector<int>> to_goal(n);
  for (int j = 0; j < n; ++j) to_goal[j] = bfs_distances(graph, goal[j]).dist;
  std::vector<int> perm(n);
  auto remaining = [&](const std::vector<int>& pos) {
    std::iota(perm.begin(), perm.end(), 0);
    int best = std::numeric_limits<int>::max();
    do {
      int total = 0;
      for (int k = 0; k < n; ++k) total += to_goal[perm[k]][pos[k]];
      best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  std::uint32_t space = 1;
  for (int k = 0; k < n; ++k) space *= static_cast<std::uint32_t>(V);
  const std::uint32_t budget_states = static_cast<std::uint32_t>(budget) + 1;

  // state = (position multiset, moves spent); only states whose spent moves
  // plus the admissible bound stay within the optimal total survive, so any
  // goal state reached is distance-optimal.
  std::vector<int> dist(space * budget_states, -1);
  auto state_key = [&](std::uint32_t pos_key, int moves) {
    return pos_key * budget_states + static_cast<std::uint32_t>(moves);
  };

  std::deque<std::uint32_t> queue;
  std::uint32_t seed = state_key(encode(start, V), 0);
  dist[seed] = 0;
  queue.push_back(seed);
  while (!queue.empty()) {
    std::uint32_t key = queue.front();
    queue.pop_front();
    std::uint32_t pos_key = key / budget_states;
    int moves = static_cast<int>(key % budget_states);
    if (pos_key == goal_pos_key) return dist[key];
    std::vector<int> pos = decode(pos_key, V, n);
    for_each_joint_move(graph, pos, [&](std::vector<int> targets, int moved) {
      int spent = moves + moved;
      if (spent > budget) return;
      std::sort(targets.begin(), targets.end());
      if (spent + remaining(targets) > budget) return;
      std::uint32_t next = state_key(encode(targets, V), spent);
      if (dist[next] < 0) {
        dist[next] = dist[key] + 1;
        queue.push_back(next);
      }
    });
  }
  throw Error(ErrorCode::InvariantViolation,
              "no distance-optimal evolution reaches the goal configuration");
}

VerifyReport verify(const Instance& instance, const Schedule& schedule) {
  VerifyReport report;
  report.feasibility = check_feasible(instance, schedule);

  bool rectangular = !schedule.trajectories.empty();
  for (const auto& row : schedule.trajectories) {
    rectangular = rectangular && row.size() == schedule.trajectories[0].size() && !row.empty();
  }
  if (rectangular) {
    report.collision = collision_check(schedule);
    report.collision_checked = true;
    report.total_moves = 0;
    for (const auto& row : schedule.trajectories) {
      for (std::size_t t = 0; t + 1 < row.size(); ++t) report.total_moves += row[t] != row[t + 1];
    }
  }

  Metrics m = metrics(instance, schedule);
  report.makespan = schedule.makespan;
  report.makespan_bound = m.makespan_bound;
  report.within_bound = report.makespan <= report.makespan_bound;

  if (instance.agent_count() <= 8) {
    report.optimal_distance = oracle_min_total_distance(instance);
    report.distance_optimal = (rectangular && report.total_moves == report.optimal_distance)
                                  ? VerifyReport::Tristate::Yes
                                  : VerifyReport::Tristate::No;
  }
  return report;
}

}  // namespace formation
