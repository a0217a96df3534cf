#include "formation/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "formation/errors.hpp"

namespace formation {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OpposedEdge: return "OpposedEdge";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NoStandaloneGoal: return "NoStandaloneGoal";
    case ErrorCode::ResidualUnderflow: return "ResidualUnderflow";
    case ErrorCode::NotOrdered: return "NotOrdered";
    case ErrorCode::TooCrowded: return "TooCrowded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= vertex_count) return false;
  const auto& nbrs = adjacency[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::int64_t Graph::edge_count() const {
  std::int64_t degree_sum = 0;
  for (const auto& nbrs : adjacency) degree_sum += static_cast<std::int64_t>(nbrs.size());
  return degree_sum / 2;
}

namespace {

std::string vertex_name(const Graph& g, int v) {
  if (!g.coords.empty()) {
    return "(" + std::to_string(g.coords[v].col) + "," + std::to_string(g.coords[v].row) + ")";
  }
  return std::to_string(v);
}

// Throws Disconnected naming the smallest unreachable vertex.
void require_connected(const Graph& g) {
  std::vector<char> seen(g.vertex_count, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  if (reached == g.vertex_count) return;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (!seen[v]) {
      throw Error(ErrorCode::Disconnected,
                  "vertex " + vertex_name(g, v) + " unreachable from " + vertex_name(g, 0));
    }
  }
}

}  // namespace

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count <= 0) {
    throw Error(ErrorCode::InvalidArgument, "vertex_count must be positive, got " +
                                                std::to_string(vertex_count));
  }
  Graph g;
  g.vertex_count = vertex_count;
  g.adjacency.assign(vertex_count, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count) {
      throw Error(ErrorCode::InvalidArgument, "edge (" + std::to_string(a) + "," +
                                                  std::to_string(b) + ") leaves vertex range");
    }
    if (a == b) {
      throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(a));
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  require_connected(g);
  return g;
}

Graph grid_graph(int cols, int rows, const std::vector<GridCell>& holes) {
  if (cols <= 0 || rows <= 0) {
    throw Error(ErrorCode::InvalidArgument, "grid dimensions must be positive, got " +
                                                std::to_string(cols) + "x" + std::to_string(rows));
  }
  std::vector<char> is_hole(static_cast<std::size_t>(cols) * rows, 0);
  for (const auto& h : holes) {
    if (h.col < 0 || h.col >= cols || h.row < 0 || h.row >= rows) {
      throw Error(ErrorCode::InvalidArgument, "hole (" + std::to_string(h.col) + "," +
                                                  std::to_string(h.row) + ") is outside the grid");
    }
    is_hole[static_cast<std::size_t>(h.row) * cols + h.col] = 1;
  }

  Graph g;
  g.grid_cols = cols;
  g.grid_rows = rows;
  std::vector<int> id(static_cast<std::size_t>(cols) * rows, -1);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::size_t cell = static_cast<std::size_t>(r) * cols + c;
      if (is_hole[cell]) continue;
      id[cell] = g.vertex_count++;
      g.coords.push_back({c, r});
    }
  }
  if (g.vertex_count == 0) {
    throw Error(ErrorCode::InvalidArgument, "every cell of the grid is a hole");
  }
  g.adjacency.assign(g.vertex_count, {});
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int u = id[static_cast<std::size_t>(r) * cols + c];
      if (u < 0) continue;
      if (c + 1 < cols) {
        int v = id[static_cast<std::size_t>(r) * cols + c + 1];
        if (v >= 0) {
          g.adjacency[u].push_back(v);
          g.adjacency[v].push_back(u);
        }
      }
      if (r + 1 < rows) {
        int v = id[static_cast<std::size_t>(r + 1) * cols + c];
        if (v >= 0) {
          g.adjacency[u].push_back(v);
          g.adjacency[v].push_back(u);
        }
      }
    }
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  require_connected(g);
  return g;
}

Instance make_instance(Graph graph, std::vector<int> starts, std::vector<int> goals) {
  const int n = static_cast<int>(starts.size());
  if (n == 0) {
    throw Error(ErrorCode::InvalidInstance, "no agents");
  }
  if (goals.size() != starts.size()) {
    throw Error(ErrorCode::InvalidInstance,
                std::to_string(starts.size()) + " starts vs " + std::to_string(goals.size()) +
                    " goals");
  }
  if (n > graph.vertex_count) {
    throw Error(ErrorCode::InvalidInstance, std::to_string(n) + " agents on " +
                                                std::to_string(graph.vertex_count) + " vertices");
  }
  std::vector<char> used(graph.vertex_count, 0);
  auto place = [&](const std::vector<int>& list, const char* what) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      int v = list[i];
      if (v < 0 || v >= graph.vertex_count) {
        throw Error(ErrorCode::InvalidInstance, std::string(what) + "[" + std::to_string(i) +
                                                    "] = " + std::to_string(v) +
                                                    " is not a vertex");
      }
      if (used[v]) {
        throw Error(ErrorCode::InvalidInstance, std::string(what) + "[" + std::to_string(i) +
                                                    "] reuses vertex " + vertex_name(graph, v));
      }
      used[v] = 1;
    }
  };
  place(starts, "starts");
  place(goals, "goals");
  return Instance{std::move(graph), std::move(starts), std::move(goals)};
}

BfsTree bfs_distances(const Graph& graph, int source) {
  if (source < 0 || source >= graph.vertex_count) {
    throw Error(ErrorCode::InvalidArgument,
                "source " + std::to_string(source) + " is not a vertex");
  }
  BfsTree tree;
  tree.source = source;
  tree.dist.assign(graph.vertex_count, -1);
  tree.parent.assign(graph.vertex_count, -1);
  std::deque<int> queue{source};
  tree.dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : graph.adjacency[u]) {
      if (tree.dist[v] < 0) {
        tree.dist[v] = tree.dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  // parent = smallest-id neighbour one layer closer; adjacency is sorted, so
  // the first hit wins and reconstruction is deterministic.
  for (int v = 0; v < graph.vertex_count; ++v) {
    if (v == source || tree.dist[v] < 0) continue;
    for (int u : graph.adjacency[v]) {
      if (tree.dist[u] == tree.dist[v] - 1) {
        tree.parent[v] = u;
        break;
      }
    }
  }
  return tree;
}

std::vector<int> bfs_path(const BfsTree& tree, int target) {
  if (target < 0 || target >= static_cast<int>(tree.dist.size()) || tree.dist[target] < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "target " + std::to_string(target) + " not reached by this tree");
  }
  std::vector<int> path;
  for (int v = target; v != -1; v = tree.parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<int>> distance_matrix(const Instance& instance) {
  const int n = instance.agent_count();
  std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    BfsTree tree = bfs_distances(instance.graph, instance.starts[i]);
    for (int j = 0; j < n; ++j) matrix[i][j] = tree.dist[instance.goals[j]];
  }
  return matrix;
}

}  // namespace formation
