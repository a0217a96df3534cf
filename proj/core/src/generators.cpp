#include "formation/generators.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "formation/errors.hpp"

namespace formation {

namespace {

std::mt19937 seeded_engine(std::uint64_t seed) {
  std::seed_seq sequence{static_cast<std::uint32_t>(seed),
                         static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937(sequence);
}

// First `count` entries of a partial Fisher-Yates shuffle of `pool`.
std::vector<int> sample(std::mt19937& rng, std::vector<int>& pool, int count) {
  for (int i = 0; i < count; ++i) {
    std::uint32_t j = i + uniform_below(rng, static_cast<std::uint32_t>(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  return {pool.begin(), pool.begin() + count};
}

GridCell cell_of(int index, int cols) { return {index % cols, index / cols}; }

}  // namespace

std::uint32_t uniform_below(std::mt19937& rng, std::uint32_t bound) {
  if (bound == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty range");
  }
  const std::uint32_t limit =
      std::numeric_limits<std::uint32_t>::max() - std::numeric_limits<std::uint32_t>::max() % bound;
  std::uint32_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

InstanceFile gen_random(int cols, int rows, int agents, std::uint64_t seed) {
  return gen_random_holed(cols, rows, 0, agents, seed);
}

InstanceFile gen_random_holed(int cols, int rows, int holes, int agents, std::uint64_t seed) {
  if (cols <= 0 || rows <= 0) {
    throw Error(ErrorCode::InvalidArgument, "grid dimensions must be positive, got " +
                                                std::to_string(cols) + "x" + std::to_string(rows));
  }
  if (agents <= 0) {
    throw Error(ErrorCode::InvalidArgument, "agent count must be positive, got " +
                                                std::to_string(agents));
  }
  const int cells = cols * rows;
  if (holes < 0 || holes >= cells) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(holes) + " holes on a " +
                                                std::to_string(cells) + " cell grid");
  }
  if (2 * agents > cells - holes) {
    throw Error(ErrorCode::TooCrowded, std::to_string(agents) + " agents need " +
                                           std::to_string(2 * agents) + " distinct cells, grid has " +
                                           std::to_string(cells - holes));
  }

  std::mt19937 rng = seeded_engine(seed);
  InstanceFile file;
  file.grid_form = true;
  file.cols = cols;
  file.rows = rows;

  std::vector<int> pool(cells);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> hole_cells = holes > 0 ? sample(rng, pool, holes) : std::vector<int>{};
    file.holes.clear();
    for (int index : hole_cells) file.holes.push_back(cell_of(index, cols));
    try {
      grid_graph(cols, rows, file.holes);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Disconnected && attempt + 1 < 200) continue;
      throw;
    }
    // pool[holes..) are exactly the open cells
    std::vector<int> open(pool.begin() + holes, pool.end());
    std::vector<int> picks = sample(rng, open, 2 * agents);
    for (int i = 0; i < agents; ++i) file.start_cells.push_back(cell_of(picks[i], cols));
    for (int i = agents; i < 2 * agents; ++i) file.goal_cells.push_back(cell_of(picks[i], cols));
    return file;
  }
  throw Error(ErrorCode::InvariantViolation, "no connected hole pattern found");
}

InstanceFile gen_tight(int agents, int ell) {
  if (agents <= 0) {
    throw Error(ErrorCode::InvalidArgument, "agent count must be positive, got " +
                                                std::to_string(agents));
  }
  if (ell < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "corridor distance must be at least 2, got " + std::to_string(ell));
  }
  InstanceFile file;
  // leaves 0..agents-1, corridor agents..agents+ell-2, leaves for goals after
  const int corridor_head = agents;
  const int corridor_tail = agents + ell - 2;
  const int first_goal = agents + ell - 1;
  file.vertices = 2 * agents + ell - 1;
  for (int i = 0; i < agents; ++i) file.edges.emplace_back(i, corridor_head);
  for (int v = corridor_head; v < corridor_tail; ++v) file.edges.emplace_back(v, v + 1);
  for (int i = 0; i < agents; ++i) file.edges.emplace_back(corridor_tail, first_goal + i);
  for (int i = 0; i < agents; ++i) file.start_ids.push_back(i);
  for (int i = 0; i < agents; ++i) file.goal_ids.push_back(first_goal + i);
  return file;
}

}  // namespace formation
