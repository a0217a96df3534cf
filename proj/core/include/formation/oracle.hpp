/*
 * exhaustive reference answers for small instances, schedule verification
 */
#pragma once

#include <cstdint>

#include "formation/graph.hpp"
#include "formation/scheduler.hpp"

namespace formation {

// Minimum total distance over all start-goal matchings; n <= 8.
std::int64_t oracle_min_total_distance(const Instance& instance);

// Minimum makespan over ALL collision-free synchronous evolutions that land
// on the goal set, via BFS on the joint configuration space (positions are a
// set: agents are indistinguishable). n <= 3 and vertex_count <= 12.
int oracle_min_makespan(const Instance& instance);

// Same search restricted to evolutions whose total move count equals the
// minimum total distance. Lower-bounds the makespan of every
// distance-optimal schedule. n <= 3 and vertex_count <= 12.
int oracle_min_makespan_distance_optimal(const Instance& instance);

struct VerifyReport {
  enum class Tristate { Yes, No, Skipped };

  Feasibility feasibility;
  bool collision_checked = false;
  Collision collision;
  Tristate distance_optimal = Tristate::Skipped;
  std::int64_t total_moves = -1;       // recomputed from the trajectories
  std::int64_t optimal_distance = -1;  // -1 when the exhaustive check is skipped
  int makespan = 0;
  int makespan_bound = 0;
  bool within_bound = false;

  bool ok() const {
    return feasibility.ok && collision_checked && collision.ok() &&
           distance_optimal != Tristate::No && within_bound;
  }
};

// Full report: evolution feasibility, earliest collision, distance optimality
// against the exhaustive matching oracle (skipped when n > 8), and the
// n + max_distance - 1 makespan bound.
VerifyReport verify(const Instance& instance, const Schedule& schedule);

}  // namespace formation
