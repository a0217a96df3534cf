#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "formation/errors.hpp"
#include "formation/generators.hpp"
#include "formation/io.hpp"
#include "formation/planner.hpp"

using namespace formation;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "formation_io_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

const char* kRowInstance = R"({
  "grid": {"cols": 4, "rows": 1, "holes": []},
  "starts": [[0, 0], [1, 0]],
  "goals": [[2, 0], [3, 0]]
})";

}  // namespace

TEST_CASE("grid instances round-trip through text") {
  InstanceFile file = parse_instance(kRowInstance);
  CHECK(file.grid_form);
  CHECK(file.cols == 4);
  CHECK(file.rows == 1);
  CHECK(file.holes.empty());
  REQUIRE(file.start_cells.size() == 2);
  CHECK(file.start_cells[1] == GridCell{1, 0});
  CHECK(file.goal_cells[0] == GridCell{2, 0});

  InstanceFile again = parse_instance(format_instance(file));
  CHECK(again.grid_form);
  CHECK(again.cols == file.cols);
  CHECK(again.rows == file.rows);
  CHECK(again.holes == file.holes);
  CHECK(again.start_cells == file.start_cells);
  CHECK(again.goal_cells == file.goal_cells);
}

TEST_CASE("explicit instances round-trip through text") {
  InstanceFile file;
  file.vertices = 4;
  file.edges = {{0, 1}, {1, 2}, {2, 3}};
  file.start_ids = {0, 1};
  file.goal_ids = {2, 3};

  InstanceFile again = parse_instance(format_instance(file));
  CHECK_FALSE(again.grid_form);
  CHECK(again.vertices == 4);
  CHECK(again.edges == file.edges);
  CHECK(again.start_ids == file.start_ids);
  CHECK(again.goal_ids == file.goal_ids);

  Instance instance = to_instance(file);
  InstanceFile rebuilt = to_instance_file(instance);
  CHECK_FALSE(rebuilt.grid_form);
  CHECK(rebuilt.vertices == 4);
  CHECK(rebuilt.edges == file.edges);
  CHECK(rebuilt.start_ids == file.start_ids);
  CHECK(rebuilt.goal_ids == file.goal_ids);
}

TEST_CASE("grid conversion rebuilds holes from coordinates") {
  InstanceFile file;
  file.grid_form = true;
  file.cols = 3;
  file.rows = 3;
  file.holes = {{1, 1}};
  file.start_cells = {{0, 0}};
  file.goal_cells = {{2, 2}};

  Instance instance = to_instance(file);
  CHECK(instance.graph.vertex_count == 8);
  InstanceFile rebuilt = to_instance_file(instance);
  CHECK(rebuilt.grid_form);
  CHECK(rebuilt.cols == 3);
  CHECK(rebuilt.rows == 3);
  CHECK(rebuilt.holes == std::vector<GridCell>{{1, 1}});
  CHECK(rebuilt.start_cells == file.start_cells);
  CHECK(rebuilt.goal_cells == file.goal_cells);
}

TEST_CASE("positions on holes or outside the grid are rejected") {
  InstanceFile file;
  file.grid_form = true;
  file.cols = 3;
  file.rows = 3;
  file.holes = {{1, 1}};
  file.start_cells = {{1, 1}};
  file.goal_cells = {{2, 2}};
  CHECK_THROWS_WITH_AS(to_instance(file),
                       "InvalidInstance: starts[0]: cell (1,1) is a hole or outside the grid",
                       Error);

  file.start_cells = {{0, 0}};
  file.goal_cells = {{3, 0}};
  CHECK_THROWS_WITH_AS(to_instance(file),
                       "InvalidInstance: goals[0]: cell (3,0) is a hole or outside the grid",
                       Error);
}

TEST_CASE("parse diagnostics name the offending field") {
  CHECK_THROWS_WITH_AS(parse_instance("{\"starts\": []}"),
                       "ParseError: instance needs either a \"grid\" or a \"vertices\" field",
                       Error);
  CHECK_THROWS_WITH_AS(parse_instance("{\"grid\": {\"cols\": 2, \"rows\": 2}}"),
                       "ParseError: missing field \"starts\"", Error);
  CHECK_THROWS_WITH_AS(
      parse_instance("{\"grid\": {\"cols\": 2, \"rows\": 2}, \"starts\": [[0]], \"goals\": []}"),
      "ParseError: starts[0]: expected [col,row]", Error);
  CHECK_THROWS_WITH_AS(parse_instance("{\"vertices\": 2, \"edges\": 5}"),
                       "ParseError: edges: expected an array of [u,v] pairs", Error);

  try {
    parse_instance("not json at all");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("not valid JSON near") != std::string::npos);
  }
}

TEST_CASE("schedules survive a save and load cycle") {
  Instance instance = to_instance(gen_random(4, 4, 3, 11));
  PlanResult result = plan(instance, true);

  auto path = temp_path("roundtrip.json");
  save_schedule(path.string(), instance, result.schedule);
  LoadedSchedule loaded = load_schedule(path.string());

  CHECK(loaded.schedule.trajectories == result.schedule.trajectories);
  CHECK(loaded.schedule.departures == result.schedule.departures);
  CHECK(loaded.schedule.makespan == result.schedule.makespan);
  CHECK(loaded.schedule.total_distance == result.schedule.total_distance);
  CHECK(loaded.instance.graph.vertex_count == instance.graph.vertex_count);
  CHECK(loaded.instance.graph.edge_count() == instance.graph.edge_count());
  CHECK(loaded.instance.starts == instance.starts);
  CHECK(loaded.instance.goals == instance.goals);
}

TEST_CASE("schedule parsing validates vertex ids against the instance") {
  const char* text = R"({
    "instance": {"grid": {"cols": 2, "rows": 2, "holes": []},
                 "starts": [[0, 0]], "goals": [[1, 1]]},
    "makespan": 2,
    "total_distance": 2,
    "departures": [0],
    "trajectories": [[0, 1, 99]]
  })";
  CHECK_THROWS_WITH_AS(parse_schedule(text),
                       "ParseError: trajectories[0]: vertex 99 is outside the instance", Error);
}

TEST_CASE("file errors carry the path") {
  auto missing = temp_path("does_not_exist.json");
  std::filesystem::remove(missing);
  try {
    load_instance(missing.string());
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(missing.string()) != std::string::npos);
    CHECK(std::string(e.what()).find("cannot open") != std::string::npos);
  }

  auto bad = temp_path("bad.json");
  {
    std::ofstream out(bad);
    out << "{\"vertices\": 2}";
  }
  try {
    load_instance(bad.string());
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
    CHECK(std::string(e.what()).find("missing field \"edges\"") != std::string::npos);
  }
}

TEST_CASE("traces print cells on grids and ids elsewhere") {
  Instance row = to_instance(parse_instance(kRowInstance));

  PlanResult sequential = plan(row, false);
  CHECK(trace_lines(row, sequential.schedule) ==
        "1: 1,0 2,0 3,0 3,0\n"
        "2: 0,0 0,0 1,0 2,0\n");

  PlanResult compressed = plan(row, true);
  CHECK(trace_lines(row, compressed.schedule) ==
        "1: 1,0 2,0 3,0\n"
        "2: 0,0 1,0 2,0\n");

  InstanceFile file;
  file.vertices = 3;
  file.edges = {{0, 1}, {1, 2}};
  file.start_ids = {0};
  file.goal_ids = {2};
  Instance line = to_instance(file);
  PlanResult single = plan(line, false);
  CHECK(trace_lines(line, single.schedule) == "1: 0 1 2\n");
}

TEST_CASE("gen_random is deterministic and places distinct cells") {
  InstanceFile a = gen_random(5, 4, 3, 42);
  InstanceFile b = gen_random(5, 4, 3, 42);
  CHECK(format_instance(a) == format_instance(b));
  CHECK(format_instance(a) != format_instance(gen_random(5, 4, 3, 43)));

  std::set<GridCell> cells;
  for (const auto& c : a.start_cells) cells.insert(c);
  for (const auto& c : a.goal_cells) cells.insert(c);
  CHECK(cells.size() == 6);
  for (const auto& c : cells) {
    CHECK(c.col >= 0);
    CHECK(c.col < 5);
    CHECK(c.row >= 0);
    CHECK(c.row < 4);
  }
}

TEST_CASE("gen_random rejects overcrowded grids") {
  CHECK_THROWS_WITH_AS(gen_random(2, 2, 3, 1),
                       "TooCrowded: 3 agents need 6 distinct cells, grid has 4", Error);
  CHECK_THROWS_WITH_AS(gen_random_holed(3, 3, 9, 1, 1), "InvalidArgument: 9 holes on a 9 cell grid",
                       Error);
  CHECK_THROWS_AS(gen_random(0, 3, 1, 1), Error);
  CHECK_THROWS_AS(gen_random(3, 3, 0, 1), Error);
}

TEST_CASE("gen_random_holed keeps the grid connected") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    InstanceFile file = gen_random_holed(6, 6, 10, 5, seed);
    CHECK(file.holes.size() == 10);
    Instance instance = to_instance(file);  // connectivity enforced here
    CHECK(instance.graph.vertex_count == 26);
    CHECK(instance.agent_count() == 5);

    std::set<GridCell> holes(file.holes.begin(), file.holes.end());
    for (const auto& c : file.start_cells) CHECK(holes.count(c) == 0);
    for (const auto& c : file.goal_cells) CHECK(holes.count(c) == 0);
  }
  CHECK(format_instance(gen_random_holed(6, 6, 10, 5, 3)) ==
        format_instance(gen_random_holed(6, 6, 10, 5, 3)));
}

TEST_CASE("gen_tight builds two stars joined by a corridor") {
  InstanceFile file = gen_tight(4, 5);
  CHECK(file.vertices == 12);
  CHECK(file.edges.size() == 11);
  Instance instance = to_instance(file);
  auto matrix = distance_matrix(instance);
  for (const auto& row : matrix) {
    for (std::int64_t d : row) CHECK(d == 5);
  }

  InstanceFile tiny = gen_tight(1, 2);
  CHECK(tiny.vertices == 3);
  CHECK(tiny.edges.size() == 2);

  PlanResult result = plan(to_instance(gen_tight(3, 3)), true);
  CHECK(result.schedule.makespan == 5);
  CHECK(result.metrics.makespan_bound == 5);

  CHECK_THROWS_AS(gen_tight(0, 3), Error);
  CHECK_THROWS_AS(gen_tight(2, 1), Error);
}
