#include "formation/scheduler.hpp"

#include <algorithm>
#include <unordered_map>

#include "formation/errors.hpp"

namespace formation {

namespace {

constexpr int kTimeBits = 21;
constexpr int kVertexBits = 21;

std::uint64_t visit_key(int v, int t) {
  return (static_cast<std::uint64_t>(v) << kTimeBits) | static_cast<std::uint64_t>(t);
}

std::uint64_t move_key(int u, int v, int t) {
  return (((static_cast<std::uint64_t>(u) << kVertexBits) | static_cast<std::uint64_t>(v))
          << kTimeBits) |
         static_cast<std::uint64_t>(t);
}

void require_ordered(const PathSet& set) {
  if (!set.ordered_for_scheduling) {
    throw Error(ErrorCode::NotOrdered, "path set was not arranged by order_paths");
  }
  if (set.paths.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty path set");
  }
}

int require_rectangular(const Schedule& schedule) {
  if (schedule.trajectories.empty() || schedule.trajectories[0].empty()) {
    throw Error(ErrorCode::InvalidArgument, "schedule has no trajectories");
  }
  const std::size_t width = schedule.trajectories[0].size();
  for (std::size_t k = 1; k < schedule.trajectories.size(); ++k) {
    if (schedule.trajectories[k].size() != width) {
      throw Error(ErrorCode::InvalidArgument,
                  "trajectory " + std::to_string(k) + " has " +
                      std::to_string(schedule.trajectories[k].size()) + " entries, expected " +
                      std::to_string(width));
    }
  }
  return static_cast<int>(width) - 1;
}

}  // namespace

std::string Collision::describe() const {
  switch (kind) {
    case Kind::None:
      return "no collision";
    case Kind::Meet:
      return "agents " + std::to_string(agent_a) + " and " + std::to_string(agent_b) +
             " meet at vertex " + std::to_string(vertex_a) + " at t=" + std::to_string(time);
    case Kind::HeadOn:
      return "agents " + std::to_string(agent_a) + " and " + std::to_string(agent_b) +
             " swap edge (" + std::to_string(vertex_a) + "," + std::to_string(vertex_b) +
             ") between t=" + std::to_string(time) + " and t=" + std::to_string(time + 1);
  }
  return "";
}

Schedule sequential_schedule(const PathSet& ordered) {
  require_ordered(ordered);
  const int n = static_cast<int>(ordered.paths.size());

  Schedule schedule;
  schedule.departures.resize(n);
  int horizon = 0;
  for (int k = 0; k < n; ++k) {
    schedule.departures[k] = k;
    horizon = std::max(horizon, k + ordered.paths[k].length());
  }
  schedule.makespan = horizon;
  schedule.trajectories.assign(n, {});
  for (int k = 0; k < n; ++k) {
    const auto& verts = ordered.paths[k].vertices;
    auto& row = schedule.trajectories[k];
    row.reserve(horizon + 1);
    for (int t = 0; t <= horizon; ++t) {
      int step = std::clamp(t - k, 0, ordered.paths[k].length());
      row.push_back(verts[step]);
    }
    schedule.total_distance += ordered.paths[k].length();
  }
  return schedule;
}

Collision collision_check(const Schedule& schedule) {
  const int horizon = require_rectangular(schedule);
  const int n = static_cast<int>(schedule.trajectories.size());

  std::unordered_map<int, int> occupant;           // vertex -> agent, per tick
  std::unordered_map<std::uint64_t, int> crossing; // undirected edge -> agent, per tick
  Collision found;
  for (int t = 0; t <= horizon; ++t) {
    occupant.clear();
    for (int k = 0; k < n; ++k) {
      int v = schedule.trajectories[k][t];
      auto [it, inserted] = occupant.try_emplace(v, k);
      if (!inserted) {
        found.kind = Collision::Kind::Meet;
        found.time = t;
        found.agent_a = it->second;
        found.agent_b = k;
        found.vertex_a = v;
        found.vertex_b = v;
        return found;
      }
    }
    if (t == horizon) break;
    crossing.clear();
    for (int k = 0; k < n; ++k) {
      int u = schedule.trajectories[k][t];
      int v = schedule.trajectories[k][t + 1];
      if (u == v) continue;
      std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                          static_cast<std::uint64_t>(std::max(u, v));
      auto [it, inserted] = crossing.try_emplace(key, k);
      if (!inserted && schedule.trajectories[it->second][t] == v) {
        found.kind = Collision::Kind::HeadOn;
        found.time = t;
        found.agent_a = it->second;
        found.agent_b = k;
        found.vertex_a = v;  // agent_a's direction of travel
        found.vertex_b = u;
        return found;
      }
    }
  }
  return found;
}

Schedule compress(const PathSet& ordered) {
  require_ordered(ordered);
  const int n = static_cast<int>(ordered.paths.size());

  int vertex_bound = 0;
  for (const auto& p : ordered.paths) {
    for (int v : p.vertices) vertex_bound = std::max(vertex_bound, v + 1);
  }
  if (vertex_bound >= (1 << kVertexBits)) {
    throw Error(ErrorCode::TooLarge, "vertex ids exceed the packing range");
  }

  std::unordered_map<std::uint64_t, int> occupied;  // (vertex, t) while en route or waiting
  std::unordered_map<std::uint64_t, int> moves;     // (u, v, t) directed step
  std::unordered_map<int, int> parked;              // goal vertex -> arrival time
  std::vector<int> latest_visit(vertex_bound, -1);

  std::vector<int> departures(n), arrivals(n);
  int latest_departure = -1;
  for (int k = 0; k < n; ++k) {
    const auto& verts = ordered.paths[k].vertices;
    const int len = ordered.paths[k].length();
    const int goal = verts.back();

    int chosen = -1;
    for (int d = 0; d <= latest_departure + 1; ++d) {
      const int arrival = d + len;
      bool clash = false;
      for (int t = 0; t <= arrival && !clash; ++t) {
        int v = t < d ? verts.front() : verts[t - d];
        if (occupied.count(visit_key(v, t))) clash = true;
        if (!clash) {
          auto it = parked.find(v);
          if (it != parked.end() && it->second <= t) clash = true;
        }
      }
      if (!clash && latest_visit[goal] >= arrival) clash = true;
      for (int s = 0; s < len && !clash; ++s) {
        if (moves.count(move_key(verts[s + 1], verts[s], d + s))) clash = true;
      }
      if (!clash) {
        chosen = d;
        break;
      }
    }
    // The sequential fallback (one step after the latest departure so far) is
    // always conflict-free for an ordered set, so the scan cannot fail.
    if (chosen < 0) {
      throw Error(ErrorCode::InvariantViolation,
                  "agent " + std::to_string(k) + " found no departure within the sequential bound");
    }

    const int arrival = chosen + len;
    if (arrival >= (1 << kTimeBits)) {
      throw Error(ErrorCode::TooLarge, "schedule horizon exceeds the packing range");
    }
    for (int t = 0; t <= arrival; ++t) {
      int v = t < chosen ? verts.front() : verts[t - chosen];
      occupied.emplace(visit_key(v, t), k);
      latest_visit[v] = std::max(latest_visit[v], t);
    }
    for (int s = 0; s < len; ++s) {
      moves.emplace(move_key(verts[s], verts[s + 1], chosen + s), k);
    }
    parked.emplace(goal, arrival);
    departures[k] = chosen;
    arrivals[k] = arrival;
    latest_departure = std::max(latest_departure, chosen);
  }

  Schedule schedule;
  schedule.departures = std::move(departures);
  schedule.makespan = *std::max_element(arrivals.begin(), arrivals.end());
  schedule.trajectories.assign(n, {});
  for (int k = 0; k < n; ++k) {
    const auto& verts = ordered.paths[k].vertices;
    auto& row = schedule.trajectories[k];
    row.reserve(schedule.makespan + 1);
    for (int t = 0; t <= schedule.makespan; ++t) {
      int step = std::clamp(t - schedule.departures[k], 0, ordered.paths[k].length());
      row.push_back(verts[step]);
    }
    schedule.total_distance += ordered.paths[k].length();
  }
  return schedule;
}

Metrics metrics(const Instance& instance, const Schedule& schedule) {
  Metrics m;
  m.makespan = schedule.makespan;
  m.total_distance = schedule.total_distance;
  for (int start : instance.starts) {
    BfsTree tree = bfs_distances(instance.graph, start);
    for (int goal : instance.goals) {
      m.max_start_goal_distance = std::max(m.max_start_goal_distance, tree.dist[goal]);
    }
  }
  m.makespan_bound = instance.agent_count() + m.max_start_goal_distance - 1;
  return m;
}

Feasibility check_feasible(const Instance& instance, const Schedule& schedule) {
  Feasibility result;
  const int n = instance.agent_count();
  if (static_cast<int>(schedule.trajectories.size()) != n) {
    result.issue = "schedule has " + std::to_string(schedule.trajectories.size()) +
                   " trajectories for " + std::to_string(n) + " agents";
    return result;
  }
  const std::size_t width = static_cast<std::size_t>(schedule.makespan) + 1;
  for (int k = 0; k < n; ++k) {
    if (schedule.trajectories[k].size() != width) {
      result.issue = "trajectory " + std::to_string(k) + " has " +
                     std::to_string(schedule.trajectories[k].size()) + " entries, expected " +
                     std::to_string(width);
      return result;
    }
    for (int v : schedule.trajectories[k]) {
      if (v < 0 || v >= instance.graph.vertex_count) {
        result.issue = "trajectory " + std::to_string(k) + " leaves the graph";
        return result;
      }
    }
  }
  if (static_cast<int>(schedule.departures.size()) != n) {
    result.issue = "departures list does not match the agent count";
    return result;
  }

  std::vector<int> first(n), last(n);
  for (int k = 0; k < n; ++k) {
    first[k] = schedule.trajectories[k].front();
    last[k] = schedule.trajectories[k].back();
  }
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(first) != sorted(instance.starts)) {
    result.issue = "positions at t=0 are not the start set";
    return result;
  }
  if (sorted(last) != sorted(instance.goals)) {
    result.issue = "final positions are not the goal set";
    return result;
  }

  for (int k = 0; k < n; ++k) {
    const auto& row = schedule.trajectories[k];
    int dep = schedule.departures[k];
    if (dep < 0 || dep > schedule.makespan) {
      result.issue = "agent " + std::to_string(k) + " departure " + std::to_string(dep) +
                     " outside the horizon";
      return result;
    }
    for (int t = 0; t <= dep; ++t) {
      if (row[t] != row[0]) {
        result.issue = "agent " + std::to_string(k) + " moved before its departure";
        return result;
      }
    }
    for (int t = 0; t < schedule.makespan; ++t) {
      if (row[t] != row[t + 1] && !instance.graph.has_edge(row[t], row[t + 1])) {
        result.issue = "agent " + std::to_string(k) + " jumps " + std::to_string(row[t]) + "->" +
                       std::to_string(row[t + 1]) + " at t=" + std::to_string(t);
        return result;
      }
    }
    // Once the goal is first reached the agent must hold it.
    int arrival = 0;
    while (row[arrival] != last[k]) ++arrival;
    for (int t = arrival; t <= schedule.makespan; ++t) {
      if (row[t] != last[k]) {
        result.issue = "agent " + std::to_string(k) + " left its goal at t=" + std::to_string(t);
        return result;
      }
    }
  }

  std::int64_t moved = 0;
  for (int k = 0; k < n; ++k) {
    const auto& row = schedule.trajectories[k];
    for (int t = 0; t < schedule.makespan; ++t) moved += row[t] != row[t + 1];
  }
  if (moved != schedule.total_distance) {
    result.issue = "total_distance " + std::to_string(schedule.total_distance) +
                   " does not match the " + std::to_string(moved) + " moves taken";
    return result;
  }

  result.ok = true;
  return result;
}

}  // namespace formation
