#include "formation/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "formation/errors.hpp"

namespace formation {

namespace {

int validate_cost_matrix(const std::vector<std::vector<int>>& cost) {
  const int n = static_cast<int>(cost.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cost[i].size()) != n) {
      throw Error(ErrorCode::NonSquare, "row " + std::to_string(i) + " has " +
                                            std::to_string(cost[i].size()) + " entries, expected " +
                                            std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      if (cost[i][j] < 0) {
        throw Error(ErrorCode::NegativeEntry, "cost[" + std::to_string(i) + "][" +
                                                  std::to_string(j) + "] = " +
                                                  std::to_string(cost[i][j]));
      }
    }
  }
  return n;
}

// Augmenting-path search restricted to tight, unclaimed columns. Moves row r
// somewhere else so its old column frees up; succeeds when the chain reaches
// free_col.
bool reroute(int r, int free_col, const std::vector<std::vector<int>>& tight,
             const std::vector<char>& fixed_col, std::vector<char>& visited,
             std::vector<int>& match_row, std::vector<int>& match_col) {
  for (int j : tight[r]) {
    if (fixed_col[j] || visited[j]) continue;
    visited[j] = 1;
    if (j == free_col ||
        reroute(match_row[j], free_col, tight, fixed_col, visited, match_row, match_col)) {
      match_row[j] = r;
      match_col[r] = j;
      return true;
    }
  }
  return false;
}

}  // namespace

Assignment hungarian(const std::vector<std::vector<int>>& cost) {
  const int n = validate_cost_matrix(cost);
  if (n == 0) return {};

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  // Shortest augmenting paths with potentials, 1-based with column 0 as slack.
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0];
      int j1 = 0;
      std::int64_t delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> match_row(n, -1), match_col(n, -1);
  for (int j = 1; j <= n; ++j) {
    match_row[j - 1] = p[j] - 1;
    match_col[p[j] - 1] = j - 1;
  }

  // The duals are optimal, so the tight subgraph contains every optimal
  // assignment. Re-match rows in ascending order to the smallest feasible
  // tight column; feasibility = the displaced row can be rerouted.
  std::vector<std::vector<int>> tight(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (u[i + 1] + v[j + 1] == cost[i][j]) tight[i].push_back(j);
    }
  }
  std::vector<char> fixed_col(n, 0);
  std::vector<char> visited(n);
  for (int i = 0; i < n; ++i) {
    bool fixed = false;
    for (int j : tight[i]) {
      if (fixed_col[j]) continue;
      if (match_col[i] == j) {
        fixed_col[j] = 1;
        fixed = true;
        break;
      }
      int displaced = match_row[j];
      int free_col = match_col[i];
      std::fill(visited.begin(), visited.end(), 0);
      visited[j] = 1;
      if (reroute(displaced, free_col, tight, fixed_col, visited, match_row, match_col)) {
        match_col[i] = j;
        match_row[j] = i;
        fixed_col[j] = 1;
        fixed = true;
        break;
      }
    }
    if (!fixed) {
      throw Error(ErrorCode::InvariantViolation,
                  "row " + std::to_string(i) + " lost its tight matching");
    }
  }

  Assignment result;
  result.sigma = std::move(match_col);
  for (int i = 0; i < n; ++i) result.total_cost += cost[i][result.sigma[i]];
  return result;
}

std::int64_t oracle_min_assignment(const std::vector<std::vector<int>>& cost) {
  const int n = validate_cost_matrix(cost);
  if (n > 8) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(n) + " rows exceeds the exhaustive limit of 8");
  }
  if (n == 0) return 0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) total += cost[i][perm[i]];
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace formation
