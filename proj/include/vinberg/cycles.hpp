#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "vinberg/errors.hpp"

namespace vinberg {

// All simple cycles of an undirected graph on {0..n-1}, as vertex sequences.
// Length-2 cycles are the edges themselves (they matter for entry-pair
// products).  Each longer cycle is listed once, starting at its smallest
// vertex with second element smaller than last; the result is sorted by
// (length, lexicographic).  Emitting more than budget cycles raises
// CycleBudgetExceeded.  max_len prunes the search depth.
inline std::vector<std::vector<int>> simple_cycles(int n,
                                                   const std::function<bool(int, int)>& adj,
                                                   int max_len,
                                                   long budget = 1000000L) {
  std::vector<std::vector<int>> out;
  auto emit = [&](const std::vector<int>& cycle) {
    if (static_cast<long>(out.size()) >= budget)
      fail(ErrorCode::CycleBudgetExceeded, "more than " + std::to_string(budget) + " cycles");
    out.push_back(cycle);
  };

  if (max_len >= 2)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adj(i, j)) emit({i, j});

  if (max_len >= 3) {
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    // Paths rooted at the cycle's minimum vertex; all other vertices larger.
    std::function<void(int, int)> dfs = [&](int root, int u) {
      if (path.size() >= 3 && adj(u, root) && path[1] < path.back()) emit(path);
      if (static_cast<int>(path.size()) == max_len) return;
      for (int w = root + 1; w < n; ++w) {
        if (on_path[w] || !adj(u, w)) continue;
        path.push_back(w);
        on_path[w] = true;
        dfs(root, w);
        on_path[w] = false;
        path.pop_back();
      }
    };
    for (int root = 0; root < n; ++root) {
      path.assign(1, root);
      std::fill(on_path.begin(), on_path.end(), false);
      on_path[root] = true;
      dfs(root, root);
    }
  }

  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace vinberg
