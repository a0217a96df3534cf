/*
 * timing harness for the planner
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "formation/generators.hpp"

namespace formation {

struct BenchRecord {
  int vertex_count = 0;
  int agent_count = 0;
  std::uint64_t seed = 0;
  double plan_time_seconds = 0.0;  // matrix + assignment + ordering + schedule
  int makespan_sequential = 0;
  int makespan_compressed = 0;
  std::int64_t total_distance = 0;
};

struct BenchCell {
  int cols = 0;
  int rows = 0;
  int agents = 0;
};

struct CellStats {
  int vertex_count = 0;
  int agent_count = 0;
  bool feasible = true;  // false when the agents cannot fit on the grid
  int runs = 0;
  double mean_plan_time_seconds = 0.0;
  double mean_makespan_sequential = 0.0;
  double mean_makespan_compressed = 0.0;
  double mean_total_distance = 0.0;
};

struct ScalingRatio {
  int agents = 0;
  int vertices_from = 0;
  int vertices_to = 0;
  double vertex_factor = 0.0;
  double time_ratio = 0.0;
};

struct ScalingReport {
  std::vector<CellStats> cells;
  std::vector<ScalingRatio> ratios;
};

// One seeded random instance; the timed region is the full plan (sequential
// departures), compression runs afterwards untimed.
BenchRecord bench_run(int cols, int rows, int agents, std::uint64_t seed);

// `runs` instances per cell with seeds seed, seed+1, ... Ratio entries pair
// consecutive cells with equal agent counts and growing grids, for checking
// measured growth against the worst-case quadratic-in-vertices model.
ScalingReport bench_suite(const std::vector<BenchCell>& cells, int runs, std::uint64_t seed);

// Grids 20x20, 40x40, 100x100 crossed with 10..1000 agents.
std::vector<BenchCell> default_suite_cells();

std::string csv_header();
std::string csv_line(const BenchRecord& record);

}  // namespace formation
