/*
 * timed schedules: sequential transfer, compression, collision checks
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "formation/graph.hpp"
#include "formation/pathset.hpp"

namespace formation {

// Synchronous trajectories, one row per scheduled agent in transfer order.
// Row k holds positions at t = 0..makespan: the start until departures[k],
// one path step per tick, then the goal forever.
struct Schedule {
  std::vector<std::vector<int>> trajectories;
  std::vector<int> departures;
  int makespan = 0;
  std::int64_t total_distance = 0;
};

struct Collision {
  enum class Kind { None, Meet, HeadOn };

  Kind kind = Kind::None;
  int time = -1;     // meet: both agents at `vertex_a` at `time`
  int agent_a = -1;  // head-on: the pair swaps between time and time+1
  int agent_b = -1;
  int vertex_a = -1;
  int vertex_b = -1;

  bool ok() const { return kind == Kind::None; }
  std::string describe() const;
};

struct Metrics {
  int makespan = 0;
  std::int64_t total_distance = 0;
  int max_start_goal_distance = 0;  // over all start-goal pairs
  int makespan_bound = 0;           // agent_count + max_start_goal_distance - 1
};

struct Feasibility {
  bool ok = false;
  std::string issue;  // first violated property, empty when ok
};

// Agent k waits k steps, then walks its path one edge per tick. Requires an
// ordered path set (NotOrdered otherwise); the ordering guarantees the result
// is collision-free.
Schedule sequential_schedule(const PathSet& ordered);

// Earliest meet or head-on between any two rows, scanning time forward.
// Agents parked before departure and after arrival participate.
Collision collision_check(const Schedule& schedule);

// Keeps the transfer order but gives every agent the earliest departure that
// conflicts with none of the previously placed rows. Never worse than the
// sequential schedule; departures stay within one step of the running maximum.
Schedule compress(const PathSet& ordered);

Metrics metrics(const Instance& instance, const Schedule& schedule);

// Checks the evolution properties on raw trajectories: starts occupied at
// t = 0, goals reached and held from first arrival, every step stays on an
// edge or waits, row shape and bookkeeping fields consistent.
Feasibility check_feasible(const Instance& instance, const Schedule& schedule);

}  // namespace formation
