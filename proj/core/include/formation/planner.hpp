/*
 * end-to-end pipeline: match, route, order, schedule
 */
#pragma once

#include "formation/assignment.hpp"
#include "formation/pathset.hpp"
#include "formation/scheduler.hpp"

namespace formation {

struct PlanResult {
  Assignment assignment;
  PathSet ordered;  // transfer order, ready for scheduling
  Schedule schedule;
  Metrics metrics;
};

// Distance matrix -> min-cost assignment -> BFS paths -> induced-DAG checks ->
// transfer ordering -> schedule. With compress_departures the departures are
// pulled forward as far as conflicts allow; otherwise agent k departs at k.
// Total distance is minimum possible either way.
PlanResult plan(const Instance& instance, bool compress_departures);

}  // namespace formation
