#include "formation/pathset.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "formation/errors.hpp"

namespace formation {

namespace {

std::string edge_name(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

std::int64_t PathSet::total_length() const {
  std::int64_t total = 0;
  for (const auto& p : paths) total += p.length();
  return total;
}

int InducedDag::out_multiplicity(int v) const {
  int total = 0;
  auto it = multiplicity.lower_bound({v, 0});
  for (; it != multiplicity.end() && it->first.first == v; ++it) total += it->second;
  return total;
}

PathSet extract_paths(const Instance& instance, const Assignment& assignment) {
  const int n = instance.agent_count();
  if (static_cast<int>(assignment.sigma.size()) != n) {
    throw Error(ErrorCode::InvalidArgument,
                "assignment covers " + std::to_string(assignment.sigma.size()) + " agents, expected " +
                    std::to_string(n));
  }
  std::vector<char> seen(n, 0);
  for (int j : assignment.sigma) {
    if (j < 0 || j >= n || seen[j]) {
      throw Error(ErrorCode::InvalidArgument, "assignment is not a permutation");
    }
    seen[j] = 1;
  }
  PathSet set;
  set.paths.reserve(n);
  for (int i = 0; i < n; ++i) {
    BfsTree tree = bfs_distances(instance.graph, instance.starts[i]);
    set.paths.push_back({bfs_path(tree, instance.goals[assignment.sigma[i]])});
  }
  return set;
}

InducedDag induce_dag(const PathSet& paths) {
  InducedDag dag;
  std::map<std::pair<int, int>, int> first_user;  // directed edge -> first path index
  for (std::size_t k = 0; k < paths.paths.size(); ++k) {
    const auto& verts = paths.paths[k].vertices;
    if (verts.empty()) {
      throw Error(ErrorCode::InvalidArgument, "path " + std::to_string(k) + " is empty");
    }
    for (std::size_t s = 0; s + 1 < verts.size(); ++s) {
      int u = verts[s];
      int v = verts[s + 1];
      if (u == v) {
        throw Error(ErrorCode::InvalidArgument, "path " + std::to_string(k) +
                                                    " repeats vertex " + std::to_string(u));
      }
      auto opposed = dag.multiplicity.find({v, u});
      if (opposed != dag.multiplicity.end()) {
        throw Error(ErrorCode::OpposedEdge,
                    "edge " + edge_name(u, v) + " is traversed both ways, paths " +
                        std::to_string(first_user[{v, u}]) + " and " + std::to_string(k));
      }
      auto [it, inserted] = dag.multiplicity.try_emplace({u, v}, 0);
      ++it->second;
      if (inserted) first_user[{u, v}] = static_cast<int>(k);
    }
  }

  // Kahn's algorithm over the vertices that appear in the dag.
  std::unordered_map<int, int> in_degree;
  std::unordered_map<int, std::vector<int>> out;
  for (const auto& [edge, mult] : dag.multiplicity) {
    (void)mult;
    out[edge.first].push_back(edge.second);
    in_degree.try_emplace(edge.first, 0);
    ++in_degree[edge.second];
  }
  std::deque<int> frontier;
  for (const auto& [v, deg] : in_degree) {
    if (deg == 0) frontier.push_back(v);
  }
  std::size_t removed = 0;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop_front();
    ++removed;
    auto it = out.find(u);
    if (it == out.end()) continue;
    for (int v : it->second) {
      if (--in_degree[v] == 0) frontier.push_back(v);
    }
  }
  if (removed != in_degree.size()) {
    int witness = -1;
    for (const auto& [v, deg] : in_degree) {
      if (deg > 0 && (witness < 0 || v < witness)) witness = v;
    }
    throw Error(ErrorCode::CycleDetected, "cycle through vertex " + std::to_string(witness));
  }
  return dag;
}

std::vector<int> standalone_goals(const InducedDag& dag, const std::vector<int>& remaining_goals) {
  if (remaining_goals.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no goals remain");
  }
  std::vector<int> result;
  for (int g : remaining_goals) {
    if (dag.out_multiplicity(g) == 0) result.push_back(g);
  }
  std::sort(result.begin(), result.end());
  if (result.empty()) {
    throw Error(ErrorCode::NoStandaloneGoal,
                "all " + std::to_string(remaining_goals.size()) +
                    " remaining goals have outgoing edges");
  }
  return result;
}

PathSet order_paths(const PathSet& paths) {
  const int n = static_cast<int>(paths.paths.size());
  if (n == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty path set");
  }
  InducedDag dag = induce_dag(paths);  // validates opposed edges and acyclicity

  int vertex_bound = 0;
  for (const auto& p : paths.paths) {
    for (int v : p.vertices) vertex_bound = std::max(vertex_bound, v + 1);
  }

  // Flattened residual. Edges arrive sorted by (u,v), so per-vertex edge
  // lists are ascending by the other endpoint.
  struct ResidualEdge {
    int u, v, mult;
  };
  std::vector<ResidualEdge> edges;
  edges.reserve(dag.multiplicity.size());
  std::vector<std::vector<int>> out(vertex_bound), in(vertex_bound);
  std::vector<int> out_mult(vertex_bound, 0);
  for (const auto& [edge, mult] : dag.multiplicity) {
    int idx = static_cast<int>(edges.size());
    edges.push_back({edge.first, edge.second, mult});
    out[edge.first].push_back(idx);
    in[edge.second].push_back(idx);
    out_mult[edge.first] += mult;
  }

  std::vector<int> heads(n), tails(n);
  std::vector<char> head_alive(n, 1), tail_alive(n, 1);
  {
    std::vector<char> seen_head(vertex_bound, 0), seen_tail(vertex_bound, 0);
    for (int k = 0; k < n; ++k) {
      heads[k] = paths.paths[k].head();
      tails[k] = paths.paths[k].tail();
      if (seen_head[heads[k]]++ || seen_tail[tails[k]]++) {
        throw Error(ErrorCode::InvalidArgument, "paths share a start or a goal");
      }
    }
    for (int k = 0; k < n; ++k) {
      if (seen_tail[heads[k]]) {
        throw Error(ErrorCode::InvalidArgument,
                    "vertex " + std::to_string(heads[k]) + " is both a start and a goal");
      }
    }
  }

  PathSet result;
  result.paths.reserve(n);
  result.ordered_for_scheduling = true;

  std::vector<int> dist(vertex_bound);
  std::vector<int> stamp(vertex_bound, -1);
  std::deque<int> queue;

  for (int round = 0; round < n; ++round) {
    // Remaining goals with no residual out-edge. Non-empty for every minimal
    // residual set; anything else means the input was not minimal.
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    int standalone_count = 0;
    for (int k = 0; k < n; ++k) {
      if (!tail_alive[k]) continue;
      int g = tails[k];
      if (out_mult[g] == 0) {
        ++standalone_count;
        if (dist[g] < 0) {
          dist[g] = 1;
          queue.push_back(g);
        }
      }
    }
    if (standalone_count == 0) {
      throw Error(ErrorCode::NoStandaloneGoal,
                  "round " + std::to_string(round) + ": every remaining goal has outgoing edges");
    }

    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int idx : in[x]) {
        const auto& e = edges[idx];
        if (e.mult > 0 && dist[e.u] < 0) {
          dist[e.u] = dist[x] + 1;
          queue.push_back(e.u);
        }
      }
    }

    int chosen = -1;
    for (int k = 0; k < n; ++k) {
      if (!head_alive[k] || dist[heads[k]] < 0) continue;
      if (chosen < 0 || dist[heads[k]] < dist[heads[chosen]] ||
          (dist[heads[k]] == dist[heads[chosen]] && heads[k] < heads[chosen])) {
        chosen = k;
      }
    }
    if (chosen < 0) {
      throw Error(ErrorCode::InvariantViolation,
                  "round " + std::to_string(round) + ": no remaining start reaches a standalone goal");
    }

    // Walk one BFS layer at a time toward the nearest standalone goal,
    // consuming multiplicities; ties take the smallest-id next vertex.
    Path walk;
    int cur = heads[chosen];
    stamp[cur] = round;
    walk.vertices.push_back(cur);
    while (dist[cur] != 1) {
      int next_idx = -1;
      for (int idx : out[cur]) {
        const auto& e = edges[idx];
        if (e.mult > 0 && dist[e.v] == dist[cur] - 1) {
          next_idx = idx;
          break;
        }
      }
      if (next_idx < 0) {
        throw Error(ErrorCode::ResidualUnderflow,
                    "walk from vertex " + std::to_string(heads[chosen]) + " stalls at vertex " +
                        std::to_string(cur));
      }
      --edges[next_idx].mult;
      out_mult[cur] -= 1;
      cur = edges[next_idx].v;
      if (stamp[cur] == round) {
        throw Error(ErrorCode::InvariantViolation,
                    "extracted path revisits vertex " + std::to_string(cur));
      }
      stamp[cur] = round;
      walk.vertices.push_back(cur);
    }

    head_alive[chosen] = 0;
    for (int k = 0; k < n; ++k) {
      if (tail_alive[k] && tails[k] == cur) {
        tail_alive[k] = 0;
        break;
      }
    }
    result.paths.push_back(std::move(walk));
  }

  for (const auto& e : edges) {
    if (e.mult != 0) {
      throw Error(ErrorCode::InvariantViolation,
                  "residual multiplicity " + std::to_string(e.mult) + " left on edge " +
                      edge_name(e.u, e.v));
    }
  }
  return result;
}

}  // namespace formation
