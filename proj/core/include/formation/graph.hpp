/*
 * undirected graph, problem instance, BFS shortest paths
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace formation {

struct GridCell {
  int col = 0;
  int row = 0;

  friend bool operator==(const GridCell&, const GridCell&) = default;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

// Connected undirected simple graph over dense ids 0..vertex_count-1.
// Adjacency lists are sorted ascending. Grid-built graphs keep their cell
// coordinates and dimensions so instance files round-trip.
struct Graph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adjacency;
  std::vector<GridCell> coords;  // one per vertex when grid-derived, else empty
  int grid_cols = 0;
  int grid_rows = 0;

  bool is_grid() const { return grid_cols > 0; }
  bool has_edge(int u, int v) const;
  std::int64_t edge_count() const;
};

// n indistinguishable agents: starts[i] / goals[j] are vertex ids, each list
// injective, the two disjoint, 1 <= n <= vertex_count.
struct Instance {
  Graph graph;
  std::vector<int> starts;
  std::vector<int> goals;

  int agent_count() const { return static_cast<int>(starts.size()); }
};

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// Four-connected cols x rows grid minus holes. Vertex ids are row-major over
// the surviving cells.
Graph grid_graph(int cols, int rows, const std::vector<GridCell>& holes);

Instance make_instance(Graph graph, std::vector<int> starts, std::vector<int> goals);

struct BfsTree {
  int source = 0;
  std::vector<int> dist;
  std::vector<int> parent;  // smallest-id predecessor on a shortest path; -1 at source
};

BfsTree bfs_distances(const Graph& graph, int source);

// Vertex sequence source..target, inclusive, following parent links.
std::vector<int> bfs_path(const BfsTree& tree, int target);

// matrix[i][j] = dist(starts[i], goals[j]); one BFS per start.
std::vector<std::vector<int>> distance_matrix(const Instance& instance);

}  // namespace formation
