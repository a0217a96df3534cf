/*
 * JSON instance / schedule files and the per-agent trace format
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "formation/graph.hpp"
#include "formation/scheduler.hpp"

namespace formation {

// On-disk instance, either a grid with holes (positions are cells) or an
// explicit edge list (positions are vertex ids).
struct InstanceFile {
  bool grid_form = false;

  int cols = 0;
  int rows = 0;
  std::vector<GridCell> holes;
  std::vector<GridCell> start_cells;
  std::vector<GridCell> goal_cells;

  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> start_ids;
  std::vector<int> goal_ids;
};

InstanceFile parse_instance(const std::string& json_text);
std::string format_instance(const InstanceFile& file);
InstanceFile load_instance(const std::string& path);
void save_instance(const std::string& path, const InstanceFile& file);

Instance to_instance(const InstanceFile& file);
InstanceFile to_instance_file(const Instance& instance);

struct LoadedSchedule {
  Instance instance;
  Schedule schedule;
};

// Schedule files embed their instance so they stand alone. Loading validates
// shape and vertex ids only; semantic checks stay in verify().
std::string format_schedule(const Instance& instance, const Schedule& schedule);
LoadedSchedule parse_schedule(const std::string& json_text);
LoadedSchedule load_schedule(const std::string& path);
void save_schedule(const std::string& path, const Instance& instance, const Schedule& schedule);

// One line per agent, 1-based: "1: 0,0 1,0 2,0" with col,row tokens on grid
// instances and vertex ids otherwise.
std::string trace_lines(const Instance& instance, const Schedule& schedule);

}  // namespace formation
