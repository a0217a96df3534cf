/*
 * Acceptance gate for the planner: eight checks, one PASS/FAIL line each,
 * nonzero exit when any check fails. Every tolerance and seed is pinned here
 * so the run is deterministic end to end (timing checks use generous margins).
 */
#include <algorithm>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "formation/assignment.hpp"
#include "formation/bench.hpp"
#include "formation/errors.hpp"
#include "formation/generators.hpp"
#include "formation/graph.hpp"
#include "formation/io.hpp"
#include "formation/oracle.hpp"
#include "formation/pathset.hpp"
#include "formation/planner.hpp"
#include "formation/scheduler.hpp"

using namespace formation;

namespace {

struct Line {
  bool pass = false;
  std::string detail;
};

std::mt19937 engine(std::uint64_t seed) {
  std::seed_seq sequence{static_cast<std::uint32_t>(seed),
                         static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937(sequence);
}

// Shared by the small-oracle and bulk families: random grid shape, every
// `holed_stride`-th instance loses up to a fifth of its cells.
Instance sampled_grid(std::uint64_t seed, int k, int max_side, int max_agents, int holed_stride) {
  auto rng = engine(seed);
  int cols = 2 + static_cast<int>(uniform_below(rng, max_side - 1));
  int rows = 2 + static_cast<int>(uniform_below(rng, max_side - 1));
  int cells = cols * rows;
  int holes = 0;
  if (k % holed_stride == holed_stride - 1 && cells / 5 > 0) {
    holes = 1 + static_cast<int>(uniform_below(rng, cells / 5));
  }
  int cap = std::min(max_agents, (cells - holes) / 2);
  int agents = 1 + static_cast<int>(uniform_below(rng, cap));
  return to_instance(gen_random_holed(cols, rows, holes, agents, seed));
}

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

// ---- 1. distance optimality against the exhaustive matching oracle --------

Line check_distance_optimality(int& bound_violations) {
  const int kInstances = 100;
  int mismatches = 0;
  std::string first;
  for (int k = 0; k < kInstances; ++k) {
    Instance instance = sampled_grid(1000 + k, k, 5, 6, 2);
    PlanResult result = plan(instance, false);
    if (result.metrics.makespan > result.metrics.makespan_bound) ++bound_violations;
    std::int64_t best = oracle_min_total_distance(instance);
    if (result.schedule.total_distance != best) {
      ++mismatches;
      if (first.empty()) {
        first = fmt(" (first: seed %d, planner %lld vs oracle %lld)", 1000 + k,
                    static_cast<long long>(result.schedule.total_distance),
                    static_cast<long long>(best));
      }
    }
  }
  return {mismatches == 0,
          fmt("distance optimality: planner total matched the exhaustive oracle on %d/%d "
              "small grids with and without holes%s",
              kInstances - mismatches, kInstances, first.c_str())};
}

// ---- 2 + 3. collision freedom and structural invariants on 1000 grids -----

struct BulkOutcome {
  Line collisions;
  Line structure;
};

BulkOutcome check_bulk(int& bound_violations) {
  const int kInstances = 1000;
  int collisions = 0, structural = 0;
  std::string first_collision, first_structural;
  for (int k = 0; k < kInstances; ++k) {
    Instance instance = sampled_grid(3000 + k, k, 21, 100, 3);
    try {
      auto matrix = distance_matrix(instance);
      Assignment assignment = hungarian(matrix);
      PathSet paths = extract_paths(instance, assignment);
      InducedDag dag = induce_dag(paths);  // opposed edges / cycles surface here
      if (standalone_goals(dag, instance.goals).empty()) {
        throw Error(ErrorCode::NoStandaloneGoal, "empty set on the full path set");
      }
      PathSet ordered = order_paths(paths);  // raises if any round lacks a standalone goal

      Schedule sequential = sequential_schedule(ordered);
      Schedule compressed = compress(ordered);
      Metrics measured = metrics(instance, sequential);
      if (measured.makespan > measured.makespan_bound) ++bound_violations;
      for (const Schedule* schedule : {&sequential, &compressed}) {
        Collision collision = collision_check(*schedule);
        if (!collision.ok()) {
          ++collisions;
          if (first_collision.empty()) {
            first_collision = fmt(" (first: seed %d, %s)", 3000 + k,
                                  collision.describe().c_str());
          }
        }
      }
    } catch (const Error& e) {
      ++structural;
      if (first_structural.empty()) {
        first_structural = fmt(" (first: seed %d, %s)", 3000 + k, e.what());
      }
    }
  }
  BulkOutcome outcome;
  outcome.collisions = {collisions == 0,
                        fmt("collision freedom: %d collisions across %d sequential and "
                            "compressed schedules on %d random grids%s",
                            collisions, 2 * kInstances, kInstances, first_collision.c_str())};
  outcome.structure = {structural == 0,
                       fmt("structural invariants: %d violations (opposed edge, cycle, or "
                           "missing standalone goal) on %d instances%s",
                           structural, kInstances, first_structural.c_str())};
  return outcome;
}

// ---- 4. makespan bound everywhere, equality on the corridor family --------

Line check_bound(int bound_violations) {
  int exact = 0, cases = 0;
  std::string first;
  for (int agents = 1; agents <= 6; ++agents) {
    for (int ell = 2; ell <= 8; ++ell) {
      ++cases;
      Instance instance = to_instance(gen_tight(agents, ell));
      PlanResult result = plan(instance, false);
      int want = agents + ell - 1;
      if (result.schedule.makespan == want && result.metrics.makespan_bound == want) {
        ++exact;
      } else if (first.empty()) {
        first = fmt(" (first: agents=%d ell=%d makespan %d, want %d)", agents, ell,
                    result.schedule.makespan, want);
      }
    }
  }
  bool pass = bound_violations == 0 && exact == cases;
  return {pass, fmt("makespan bound: %d violations of agents+distance-1 across 1100 instances; "
                    "corridor family tight on %d/%d shapes%s",
                    bound_violations, exact, cases, first.c_str())};
}

// ---- 5. distance/time trade-off witness -----------------------------------

std::vector<std::vector<int>> all_shortest_paths(const Graph& graph, int from, int to) {
  BfsTree toward = bfs_distances(graph, to);
  std::vector<std::vector<int>> found;
  std::vector<int> walk{from};
  std::function<void(int)> descend = [&](int v) {
    if (v == to) {
      found.push_back(walk);
      return;
    }
    for (int w : graph.adjacency[v]) {
      if (toward.dist[w] == toward.dist[v] - 1) {
        walk.push_back(w);
        descend(w);
        walk.pop_back();
      }
    }
  };
  descend(from);
  return found;
}

// Best compressed makespan over every minimum-distance path set: all optimal
// matchings crossed with all shortest-path choices (bounded; instances here
// have at most 3 agents on at most 10 vertices).
int best_distance_optimal_compression(const Instance& instance, std::int64_t optimum) {
  const int n = instance.agent_count();
  auto matrix = distance_matrix(instance);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = -1;
  int combos = 0;
  do {
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) total += matrix[i][perm[i]];
    if (total != optimum) continue;

    std::vector<std::vector<std::vector<int>>> choices(n);
    for (int i = 0; i < n; ++i) {
      choices[i] = all_shortest_paths(instance.graph, instance.starts[i],
                                      instance.goals[perm[i]]);
    }
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      if (++combos > 4096) return best;  // cap never reached at this scale
      PathSet paths;
      for (int i = 0; i < n; ++i) paths.paths.push_back(Path{choices[i][pick[i]]});
      Schedule schedule = compress(order_paths(paths));
      if (best < 0 || schedule.makespan < best) best = schedule.makespan;

      int wheel = n - 1;
      while (wheel >= 0 && ++pick[wheel] == choices[wheel].size()) pick[wheel--] = 0;
      if (wheel < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_bipartite(const Graph& graph) {
  std::vector<int> color(graph.vertex_count, -1);
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : graph.adjacency[u]) {
      if (color[v] < 0) {
        color[v] = color[u] ^ 1;
        stack.push_back(v);
      } else if (color[v] == color[u]) {
        return false;
      }
    }
  }
  return true;
}

// Random connected graphs, 6..10 vertices, 2..3 agents. Bipartite graphs are
// skipped: there every matching total has the same parity, which rules out
// the distance-vs-time tension this check hunts for.
Line check_tradeoff_witness() {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    auto rng = engine(20000 + attempt);
    int vertices = 6 + static_cast<int>(uniform_below(rng, 5));
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> have;
    for (int v = 1; v < vertices; ++v) {
      int u = static_cast<int>(uniform_below(rng, v));
      edges.emplace_back(u, v);
      have.emplace(u, v);
    }
    int extras = 1 + static_cast<int>(uniform_below(rng, 3));
    for (int added = 0, tries = 0; added < extras && tries < 60; ++tries) {
      int u = static_cast<int>(uniform_below(rng, vertices));
      int v = static_cast<int>(uniform_below(rng, vertices));
      if (u == v) continue;
      auto key = std::minmax(u, v);
      if (!have.insert(key).second) continue;
      edges.push_back(key);
      ++added;
    }
    Graph graph = build_graph(vertices, edges);
    if (is_bipartite(graph)) continue;

    int agents = 2 + static_cast<int>(uniform_below(rng, 2));
    std::vector<int> pool(vertices);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < 2 * agents; ++i) {
      std::uint32_t j = i + uniform_below(rng, static_cast<std::uint32_t>(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    Instance instance = make_instance(std::move(graph), {pool.begin(), pool.begin() + agents},
                                      {pool.begin() + agents, pool.begin() + 2 * agents});

    int free_makespan = oracle_min_makespan(instance);
    int restricted = oracle_min_makespan_distance_optimal(instance);
    if (free_makespan >= restricted) continue;

    // Corroborate by enumeration: every minimum-distance path set, compressed,
    // stays slower than the unrestricted optimum.
    std::int64_t optimum = oracle_min_total_distance(instance);
    int enumerated = best_distance_optimal_compression(instance, optimum);
    if (enumerated <= free_makespan || enumerated < restricted) {
      return {false, fmt("distance/time trade-off: inconsistent witness at attempt %d (free %d, "
                         "restricted %d, enumerated %d)",
                         attempt, free_makespan, restricted, enumerated)};
    }
    return {true, fmt("distance/time trade-off: witness at attempt %d (%d vertices, %d agents): "
                      "free makespan %d < %d for every minimum-distance schedule "
                      "(enumerated compressions agree at %d)",
                      attempt, instance.graph.vertex_count, instance.agent_count(), free_makespan,
                      restricted, enumerated)};
  }
  return {false, "distance/time trade-off: no witness in 2000 seeded attempts"};
}

// ---- 6. crowding shrinks the compressed makespan --------------------------

Line check_crowding() {
  const int agent_counts[] = {10, 20, 50, 75, 100, 150, 200};
  double means[7] = {};
  for (int i = 0; i < 7; ++i) {
    double sum = 0;
    for (int run = 0; run < 10; ++run) {
      Instance instance = to_instance(gen_random(21, 21, agent_counts[i], 10000 + 100 * i + run));
      sum += plan(instance, true).schedule.makespan;
    }
    means[i] = sum / 10.0;
  }
  int inversions = 0;
  for (int i = 0; i + 1 < 7; ++i) {
    if (means[i + 1] > means[i]) ++inversions;
  }
  bool mid_ok = means[3] >= 7.0 && means[3] <= 14.0;
  return {inversions <= 1 && mid_ok,
          fmt("crowding: mean compressed makespan over 10..200 agents on a 21x21 grid is "
              "%.1f %.1f %.1f %.1f %.1f %.1f %.1f (%d adjacent inversions, 75-agent mean %.2f "
              "within [7,14])",
              means[0], means[1], means[2], means[3], means[4], means[5], means[6], inversions,
              means[3])};
}

// ---- 7. plan-time scaling and absolute ceiling -----------------------------

Line check_scaling() {
  std::vector<BenchCell> cells = {{20, 20, 10}, {40, 40, 10}, {20, 20, 25},
                                  {40, 40, 25}, {20, 20, 50}, {40, 40, 50}};
  ScalingReport report = bench_suite(cells, 40, 31000);
  bool ratios_ok = report.ratios.size() == 3;
  std::string ratio_text;
  for (const auto& ratio : report.ratios) {
    if (ratio.time_ratio < 2.0 || ratio.time_ratio > 8.0) ratios_ok = false;
    ratio_text += fmt(" %.2f", ratio.time_ratio);
  }
  ScalingReport ceiling = bench_suite({{100, 100, 1000}}, 3, 32000);
  double seconds = ceiling.cells[0].mean_plan_time_seconds;
  bool ceiling_ok = ceiling.cells[0].feasible && seconds < 60.0;
  return {ratios_ok && ceiling_ok,
          fmt("scaling: quadrupling 400->1600 vertices multiplied plan time by%s (each within "
              "[2,8]); 1000 agents on 10000 vertices planned in %.2f s (< 60 s)",
              ratio_text.c_str(), seconds)};
}

// ---- 8. schedule semantics on the frozen fixture ---------------------------

Line check_semantics() {
  InstanceFile file;
  file.grid_form = true;
  file.cols = 4;
  file.rows = 1;
  file.start_cells = {{0, 0}, {1, 0}};
  file.goal_cells = {{2, 0}, {3, 0}};
  Instance instance = to_instance(file);

  PlanResult sequential = plan(instance, false);
  PlanResult compressed = plan(instance, true);

  const std::string want_sequential =
      "1: 1,0 2,0 3,0 3,0\n"
      "2: 0,0 0,0 1,0 2,0\n";
  const std::string want_compressed =
      "1: 1,0 2,0 3,0\n"
      "2: 0,0 1,0 2,0\n";

  bool traces_ok = trace_lines(instance, sequential.schedule) == want_sequential &&
                   trace_lines(instance, compressed.schedule) == want_compressed;

  // trailing pattern: the second agent enters the first agent's vacated start
  // one step after departure
  const auto& rows = compressed.schedule.trajectories;
  bool trailing_ok = rows.size() == 2 && rows[1][1] == rows[0][0] &&
                     compressed.schedule.departures == std::vector<int>{0, 0} &&
                     compressed.schedule.makespan == 2;

  bool anchored = check_feasible(instance, sequential.schedule).ok &&
                  check_feasible(instance, compressed.schedule).ok;

  auto path = std::filesystem::temp_directory_path() / "formation_acceptance_fixture.json";
  save_schedule(path.string(), instance, compressed.schedule);
  LoadedSchedule loaded = load_schedule(path.string());
  bool roundtrip_ok = trace_lines(loaded.instance, loaded.schedule) == want_compressed &&
                      verify(loaded.instance, loaded.schedule).ok();

  bool pass = traces_ok && trailing_ok && anchored && roundtrip_ok;
  return {pass, fmt("schedule semantics: frozen traces %s, trailing-start pattern %s, "
                    "anchoring %s, file round-trip %s",
                    traces_ok ? "match" : "differ", trailing_ok ? "present" : "missing",
                    anchored ? "holds" : "broken", roundtrip_ok ? "intact" : "broken")};
}

}  // namespace

int main() {
  int bound_violations = 0;

  Line lines[8];
  lines[0] = check_distance_optimality(bound_violations);
  BulkOutcome bulk = check_bulk(bound_violations);
  lines[1] = bulk.collisions;
  lines[2] = bulk.structure;
  lines[3] = check_bound(bound_violations);
  lines[4] = check_tradeoff_witness();
  lines[5] = check_crowding();
  lines[6] = check_scaling();
  lines[7] = check_semantics();

  int failures = 0;
  for (int i = 0; i < 8; ++i) {
    std::printf("%s criterion %d: %s\n", lines[i].pass ? "PASS" : "FAIL", i + 1,
                lines[i].detail.c_str());
    if (!lines[i].pass) ++failures;
  }
  return failures;
}
