#include "formation/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "formation/errors.hpp"

namespace formation {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) fail("expected an object around \"" + std::string(key) + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) fail("missing field \"" + std::string(key) + "\"");
  return *it;
}

int int_field(const json& obj, const char* key) {
  const json& value = field(obj, key);
  if (!value.is_number_integer()) fail("field \"" + std::string(key) + "\" must be an integer");
  auto wide = value.get<std::int64_t>();
  if (wide < INT32_MIN || wide > INT32_MAX) fail("field \"" + std::string(key) + "\" out of range");
  return static_cast<int>(wide);
}

std::int64_t int64_field(const json& obj, const char* key) {
  const json& value = field(obj, key);
  if (!value.is_number_integer()) fail("field \"" + std::string(key) + "\" must be an integer");
  return value.get<std::int64_t>();
}

int int_at(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where + ": expected an integer");
  auto wide = value.get<std::int64_t>();
  if (wide < INT32_MIN || wide > INT32_MAX) fail(where + ": out of range");
  return static_cast<int>(wide);
}

std::vector<GridCell> cell_list(const json& value, const std::string& what) {
  if (!value.is_array()) fail(what + ": expected an array of [col,row] pairs");
  std::vector<GridCell> cells;
  cells.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& entry = value[i];
    std::string where = what + "[" + std::to_string(i) + "]";
    if (!entry.is_array() || entry.size() != 2) fail(where + ": expected [col,row]");
    cells.push_back({int_at(entry[0], where), int_at(entry[1], where)});
  }
  return cells;
}

std::vector<int> id_list(const json& value, const std::string& what) {
  if (!value.is_array()) fail(what + ": expected an array of vertex ids");
  std::vector<int> ids;
  ids.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    ids.push_back(int_at(value[i], what + "[" + std::to_string(i) + "]"));
  }
  return ids;
}

json cells_json(const std::vector<GridCell>& cells) {
  json out = json::array();
  for (const auto& c : cells) out.push_back({c.col, c.row});
  return out;
}

InstanceFile instance_from_json(const json& root) {
  if (!root.is_object()) fail("top level must be an object");
  InstanceFile file;
  if (root.contains("grid")) {
    file.grid_form = true;
    const json& grid = field(root, "grid");
    file.cols = int_field(grid, "cols");
    file.rows = int_field(grid, "rows");
    file.holes = grid.contains("holes") ? cell_list(grid["holes"], "holes") : std::vector<GridCell>{};
    file.start_cells = cell_list(field(root, "starts"), "starts");
    file.goal_cells = cell_list(field(root, "goals"), "goals");
  } else if (root.contains("vertices")) {
    file.vertices = int_field(root, "vertices");
    const json& edges = field(root, "edges");
    if (!edges.is_array()) fail("edges: expected an array of [u,v] pairs");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const json& entry = edges[i];
      std::string where = "edges[" + std::to_string(i) + "]";
      if (!entry.is_array() || entry.size() != 2) fail(where + ": expected [u,v]");
      file.edges.emplace_back(int_at(entry[0], where), int_at(entry[1], where));
    }
    file.start_ids = id_list(field(root, "starts"), "starts");
    file.goal_ids = id_list(field(root, "goals"), "goals");
  } else {
    fail("instance needs either a \"grid\" or a \"vertices\" field");
  }
  return file;
}

json instance_to_json(const InstanceFile& file) {
  json root;
  if (file.grid_form) {
    root["grid"] = {{"cols", file.cols}, {"rows", file.rows}, {"holes", cells_json(file.holes)}};
    root["starts"] = cells_json(file.start_cells);
    root["goals"] = cells_json(file.goal_cells);
  } else {
    root["vertices"] = file.vertices;
    json edges = json::array();
    for (const auto& [u, v] : file.edges) edges.push_back({u, v});
    root["edges"] = std::move(edges);
    root["starts"] = file.start_ids;
    root["goals"] = file.goal_ids;
  }
  return root;
}

json parse_text(const std::string& text) {
  json root = json::parse(text, nullptr, false);
  if (root.is_discarded()) {
    auto snippet = text.substr(0, 40);
    fail("not valid JSON near \"" + snippet + (text.size() > 40 ? "..." : "") + "\"");
  }
  return root;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
}

}  // namespace

InstanceFile parse_instance(const std::string& json_text) {
  return instance_from_json(parse_text(json_text));
}

std::string format_instance(const InstanceFile& file) {
  return instance_to_json(file).dump(2) + "\n";
}

InstanceFile load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) {
      throw Error(ErrorCode::ParseError, path + ": " + std::string(e.what()).substr(12));
    }
    throw;
  }
}

void save_instance(const std::string& path, const InstanceFile& file) {
  write_file(path, format_instance(file));
}

Instance to_instance(const InstanceFile& file) {
  if (file.grid_form) {
    Graph graph = grid_graph(file.cols, file.rows, file.holes);
    std::map<GridCell, int> id_of;
    for (int v = 0; v < graph.vertex_count; ++v) id_of[graph.coords[v]] = v;
    auto lookup = [&](const std::vector<GridCell>& cells, const char* what) {
      std::vector<int> ids;
      ids.reserve(cells.size());
      for (std::size_t i = 0; i < cells.size(); ++i) {
        auto it = id_of.find(cells[i]);
        if (it == id_of.end()) {
          throw Error(ErrorCode::InvalidInstance,
                      std::string(what) + "[" + std::to_string(i) + "]: cell (" +
                          std::to_string(cells[i].col) + "," + std::to_string(cells[i].row) +
                          ") is a hole or outside the grid");
        }
        ids.push_back(it->second);
      }
      return ids;
    };
    auto starts = lookup(file.start_cells, "starts");
    auto goals = lookup(file.goal_cells, "goals");
    return make_instance(std::move(graph), std::move(starts), std::move(goals));
  }
  Graph graph = build_graph(file.vertices, file.edges);
  return make_instance(std::move(graph), file.start_ids, file.goal_ids);
}

InstanceFile to_instance_file(const Instance& instance) {
  InstanceFile file;
  const Graph& graph = instance.graph;
  if (graph.is_grid()) {
    file.grid_form = true;
    file.cols = graph.grid_cols;
    file.rows = graph.grid_rows;
    std::vector<char> occupied(static_cast<std::size_t>(file.cols) * file.rows, 0);
    for (const auto& c : graph.coords) {
      occupied[static_cast<std::size_t>(c.row) * file.cols + c.col] = 1;
    }
    for (int r = 0; r < file.rows; ++r) {
      for (int c = 0; c < file.cols; ++c) {
        if (!occupied[static_cast<std::size_t>(r) * file.cols + c]) file.holes.push_back({c, r});
      }
    }
    for (int v : instance.starts) file.start_cells.push_back(graph.coords[v]);
    for (int v : instance.goals) file.goal_cells.push_back(graph.coords[v]);
  } else {
    file.vertices = graph.vertex_count;
    for (int u = 0; u < graph.vertex_count; ++u) {
      for (int v : graph.adjacency[u]) {
        if (u < v) file.edges.emplace_back(u, v);
      }
    }
    file.start_ids = instance.starts;
    file.goal_ids = instance.goals;
  }
  return file;
}

std::string format_schedule(const Instance& instance, const Schedule& schedule) {
  json root;
  root["instance"] = instance_to_json(to_instance_file(instance));
  root["makespan"] = schedule.makespan;
  root["total_distance"] = schedule.total_distance;
  root["departures"] = schedule.departures;
  root["trajectories"] = schedule.trajectories;
  return root.dump(2) + "\n";
}

LoadedSchedule parse_schedule(const std::string& json_text) {
  json root = parse_text(json_text);
  if (!root.is_object()) fail("top level must be an object");
  LoadedSchedule loaded;
  loaded.instance = to_instance(instance_from_json(field(root, "instance")));
  loaded.schedule.makespan = int_field(root, "makespan");
  loaded.schedule.total_distance = int64_field(root, "total_distance");
  loaded.schedule.departures = id_list(field(root, "departures"), "departures");
  const json& rows = field(root, "trajectories");
  if (!rows.is_array()) fail("trajectories: expected an array of arrays");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    loaded.schedule.trajectories.push_back(
        id_list(rows[k], "trajectories[" + std::to_string(k) + "]"));
    for (int v : loaded.schedule.trajectories.back()) {
      if (v < 0 || v >= loaded.instance.graph.vertex_count) {
        fail("trajectories[" + std::to_string(k) + "]: vertex " + std::to_string(v) +
             " is outside the instance");
      }
    }
  }
  return loaded;
}

LoadedSchedule load_schedule(const std::string& path) {
  try {
    return parse_schedule(read_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) {
      throw Error(ErrorCode::ParseError, path + ": " + std::string(e.what()).substr(12));
    }
    throw;
  }
}

void save_schedule(const std::string& path, const Instance& instance, const Schedule& schedule) {
  write_file(path, format_schedule(instance, schedule));
}

std::string trace_lines(const Instance& instance, const Schedule& schedule) {
  const Graph& graph = instance.graph;
  std::ostringstream out;
  for (std::size_t k = 0; k < schedule.trajectories.size(); ++k) {
    out << (k + 1) << ":";
    for (int v : schedule.trajectories[k]) {
      if (graph.is_grid()) {
        out << ' ' << graph.coords[v].col << ',' << graph.coords[v].row;
      } else {
        out << ' ' << v;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace formation
