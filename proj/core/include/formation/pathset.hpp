/*
 * shortest-path sets, the directed graph they induce, transfer ordering
 */
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "formation/assignment.hpp"
#include "formation/graph.hpp"

namespace formation {

struct Path {
  std::vector<int> vertices;  // start..goal inclusive, consecutive entries adjacent

  int head() const { return vertices.front(); }
  int tail() const { return vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct PathSet {
  std::vector<Path> paths;
  // True once order_paths has arranged the set so agent k may depart one step
  // after agent k-1 without conflicts.
  bool ordered_for_scheduling = false;

  std::int64_t total_length() const;
};

// Directed multigraph induced by a path set: each traversal of (u,v)
// contributes one unit of multiplicity. For a minimum-total-distance path
// set this is a DAG and never carries an edge in both directions.
struct InducedDag {
  std::map<std::pair<int, int>, int> multiplicity;

  int out_multiplicity(int v) const;
};

// One BFS shortest path per agent, start i to goal sigma[i]. Deterministic:
// smallest-id parent at every layer.
PathSet extract_paths(const Instance& instance, const Assignment& assignment);

// Accumulates directed multiplicities and enforces the two structural
// invariants: OpposedEdge if some edge is traversed in both directions,
// CycleDetected if the directed graph has a cycle.
InducedDag induce_dag(const PathSet& paths);

// Goals with zero outgoing multiplicity, ascending. For a minimum path set
// this is never empty while goals remain; NoStandaloneGoal otherwise.
std::vector<int> standalone_goals(const InducedDag& dag, const std::vector<int>& remaining_goals);

// Rewrites the set into transfer order. Round k: BFS the reversed residual
// DAG from the remaining standalone goals, pick the closest remaining start
// (ties: smallest id), walk it forward to a standalone goal consuming edge
// multiplicities. Total length is preserved; every prefix property needed by
// sequential_schedule holds afterwards.
PathSet order_paths(const PathSet& paths);

}  // namespace formation
