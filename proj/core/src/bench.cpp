#include "formation/bench.hpp"

#include <chrono>
#include <cstdio>

#include "formation/errors.hpp"
#include "formation/planner.hpp"

namespace formation {

BenchRecord bench_run(int cols, int rows, int agents, std::uint64_t seed) {
  InstanceFile file = gen_random(cols, rows, agents, seed);
  Instance instance = to_instance(file);

  auto begin = std::chrono::steady_clock::now();
  PlanResult result = plan(instance, false);
  auto end = std::chrono::steady_clock::now();

  Schedule compressed = compress(result.ordered);

  BenchRecord record;
  record.vertex_count = instance.graph.vertex_count;
  record.agent_count = agents;
  record.seed = seed;
  record.plan_time_seconds = std::chrono::duration<double>(end - begin).count();
  record.makespan_sequential = result.schedule.makespan;
  record.makespan_compressed = compressed.makespan;
  record.total_distance = result.schedule.total_distance;
  return record;
}

ScalingReport bench_suite(const std::vector<BenchCell>& cells, int runs, std::uint64_t seed) {
  if (runs <= 0) {
    throw Error(ErrorCode::InvalidArgument, "runs must be positive");
  }
  ScalingReport report;
  for (const auto& cell : cells) {
    CellStats stats;
    stats.vertex_count = cell.cols * cell.rows;
    stats.agent_count = cell.agents;
    try {
      for (int r = 0; r < runs; ++r) {
        BenchRecord record = bench_run(cell.cols, cell.rows, cell.agents, seed + r);
        stats.mean_plan_time_seconds += record.plan_time_seconds;
        stats.mean_makespan_sequential += record.makespan_sequential;
        stats.mean_makespan_compressed += record.makespan_compressed;
        stats.mean_total_distance += static_cast<double>(record.total_distance);
        ++stats.runs;
      }
      stats.mean_plan_time_seconds /= stats.runs;
      stats.mean_makespan_sequential /= stats.runs;
      stats.mean_makespan_compressed /= stats.runs;
      stats.mean_total_distance /= stats.runs;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooCrowded) throw;
      stats = CellStats{};
      stats.vertex_count = cell.cols * cell.rows;
      stats.agent_count = cell.agents;
      stats.feasible = false;
    }
    report.cells.push_back(stats);
  }

  for (std::size_t i = 0; i + 1 < report.cells.size(); ++i) {
    const CellStats& a = report.cells[i];
    const CellStats& b = report.cells[i + 1];
    if (a.agent_count != b.agent_count || !a.feasible || !b.feasible) continue;
    if (b.vertex_count <= a.vertex_count || a.mean_plan_time_seconds <= 0.0) continue;
    ScalingRatio ratio;
    ratio.agents = a.agent_count;
    ratio.vertices_from = a.vertex_count;
    ratio.vertices_to = b.vertex_count;
    ratio.vertex_factor = static_cast<double>(b.vertex_count) / a.vertex_count;
    ratio.time_ratio = b.mean_plan_time_seconds / a.mean_plan_time_seconds;
    report.ratios.push_back(ratio);
  }
  return report;
}

std::vector<BenchCell> default_suite_cells() {
  std::vector<BenchCell> cells;
  for (int agents : {10, 25, 50, 100, 250, 500, 1000}) {
    for (int side : {20, 40, 100}) {
      cells.push_back({side, side, agents});
    }
  }
  return cells;
}

std::string csv_header() {
  return "vertex_count,agent_count,seed,plan_time_seconds,makespan_sequential,"
         "makespan_compressed,total_distance";
}

std::string csv_line(const BenchRecord& record) {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "%d,%d,%llu,%.6f,%d,%d,%lld", record.vertex_count,
                record.agent_count, static_cast<unsigned long long>(record.seed),
                record.plan_time_seconds, record.makespan_sequential, record.makespan_compressed,
                static_cast<long long>(record.total_distance));
  return buffer;
}

}  // namespace formation
