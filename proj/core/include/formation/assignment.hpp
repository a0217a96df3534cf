/*
 * min-cost perfect assignment on a square cost matrix
 */
#pragma once

#include <cstdint>
#include <vector>

namespace formation {

struct Assignment {
  std::vector<int> sigma;  // sigma[i] = column matched to row i
  std::int64_t total_cost = 0;
};

// O(n^3) shortest-augmenting-path solver with dual potentials. Among all
// minimum-cost assignments it returns the lexicographically smallest sigma:
// after the cost optimum is found, rows are re-matched in ascending order to
// the smallest column that keeps a perfect matching inside the tight subgraph
// of the final duals (every optimal assignment lives there, and any perfect
// matching of tight edges is optimal).
Assignment hungarian(const std::vector<std::vector<int>>& cost);

// Exhaustive minimum over all n! permutations; n <= 8.
std::int64_t oracle_min_assignment(const std::vector<std::vector<int>>& cost);

}  // namespace formation
