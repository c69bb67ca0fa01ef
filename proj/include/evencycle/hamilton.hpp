#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace evencycle {

/// Posa's degree condition: for every positive integer k < (n-1)/2 fewer
/// than k vertices have degree <= k, and for odd n at most (n-1)/2 vertices
/// have degree <= (n-1)/2. Sufficient for Hamiltonicity, not necessary.
inline bool posa_check(const Graph& g) {
  int n = g.size();
  if (n < 3) throw std::invalid_argument("posa_check needs n >= 3");
  std::vector<int> deg_count(n, 0);
  for (int v = 0; v < n; ++v) ++deg_count[g.degree(v)];
  auto count_at_most = [&](int k) {
    int c = 0;
    for (int d = 0; d <= k && d < n; ++d) c += deg_count[d];
    return c;
  };
  for (int k = 1; 2 * k < n - 1; ++k)
    if (count_at_most(k) >= k) return false;
  if (n % 2 == 1) {
    int half = (n - 1) / 2;
    if (count_at_most(half) > half) return false;
  }
  return true;
}

namespace detail {

// Exhaustive Hamilton-cycle search; definitive for small n. Anchored at
// vertex 0, with the direction fixed by second < last to halve the work.
inline bool ham_cycle_exhaustive(const Graph& g, std::vector<int>& out) {
  int n = g.size();
  if (!is_connected(g) || min_degree(g) < 2) return false;
  std::vector<int> path{0};
  VertexSet used(n);
  used.insert(0);

  auto dfs = [&](auto&& self, int u) -> bool {
    if (int(path.size()) == n)
      return g.adjacent(u, 0) && path[1] < path.back();
    for (int w = g.neighbors(u).first(); w >= 0; w = g.neighbors(u).next(w)) {
      if (used.contains(w)) continue;
      used.insert(w);
      path.push_back(w);
      if (self(self, w)) return true;
      path.pop_back();
      used.erase(w);
    }
    return false;
  };
  if (dfs(dfs, 0)) {
    out = path;
    return true;
  }
  return false;
}

// One pass of rotation-extension from a seed vertex. Returns a Hamilton
// cycle when it closes one; guaranteed to succeed when delta >= n/2.
inline bool ham_cycle_rotation(const Graph& g, int seed,
                               std::vector<int>& out) {
  int n = g.size();
  std::vector<int> path{seed};
  VertexSet on_path(n);
  on_path.insert(seed);

  auto extend_ends = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (bool front : {false, true}) {
        int end = front ? path.front() : path.back();
        int pick = -1;
        g.neighbors(end).for_each([&](int w) {
          if (pick < 0 && !on_path.contains(w)) pick = w;
        });
        if (pick >= 0) {
          if (front)
            path.insert(path.begin(), pick);
          else
            path.push_back(pick);
          on_path.insert(pick);
          grew = true;
        }
      }
    }
  };

  for (int guard = 0; guard < 4 * n + 8; ++guard) {
    extend_ends();
    int m = int(path.size());
    int x = path.front(), y = path.back();

    // Close directly if possible.
    bool closed = false;
    std::vector<int> cyc;
    if (g.adjacent(x, y)) {
      cyc = path;
      closed = true;
    } else {
      // Crossing pair: positions i with path[i] ~ y and path[i+1] ~ x give
      // the cycle x..path[i] y..path[i+1] x.
      std::vector<char> nbr_x(n, 0);
      g.neighbors(x).for_each([&](int w) { nbr_x[w] = 1; });
      for (int i = 1; i + 1 < m && !closed; ++i) {
        if (g.adjacent(path[i], y) && nbr_x[path[i + 1]]) {
          cyc.assign(path.begin(), path.begin() + i + 1);
          for (int j = m - 1; j > i; --j) cyc.push_back(path[j]);
          closed = true;
        }
      }
    }

    if (closed) {
      if (int(cyc.size()) == n) {
        out = cyc;
        return true;
      }
      // Break the cycle at a vertex with an outside neighbor and keep
      // growing from there.
      int break_at = -1, outside = -1;
      for (int i = 0; i < int(cyc.size()) && break_at < 0; ++i) {
        g.neighbors(cyc[i]).for_each([&](int w) {
          if (break_at < 0 && !on_path.contains(w)) {
            break_at = i;
            outside = w;
          }
        });
      }
      if (break_at < 0) return false;  // stuck on a non-spanning cycle
      std::vector<int> rebuilt;
      for (int j = 1; j <= int(cyc.size()); ++j)
        rebuilt.push_back(cyc[(break_at + j) % cyc.size()]);
      rebuilt.push_back(outside);
      on_path.insert(outside);
      path = std::move(rebuilt);
      continue;
    }

    // Rotate at the back endpoint hoping to expose an extendable endpoint.
    bool rotated = false;
    for (int i = 0; i + 2 < m && !rotated; ++i) {
      if (!g.adjacent(y, path[i])) continue;
      int cand = path[i + 1];
      bool cand_extends = false;
      g.neighbors(cand).for_each([&](int w) {
        if (!on_path.contains(w)) cand_extends = true;
      });
      if (cand_extends || g.adjacent(cand, x)) {
        std::reverse(path.begin() + i + 1, path.end());
        rotated = true;
      }
    }
    if (!rotated) return false;
  }
  return false;
}

}  // namespace detail

/// Constructive Hamilton-cycle search: rotation-extension with restarts,
/// guaranteed in the Dirac regime delta >= n/2; exhaustive (and therefore
/// definitive) for n <= 14. nullopt above that threshold is not a proof of
/// absence.
inline std::optional<std::vector<int>> find_hamilton_cycle(const Graph& g) {
  int n = g.size();
  if (n < 3) throw std::invalid_argument("find_hamilton_cycle needs n >= 3");
  if (!is_connected(g) || min_degree(g) < 2) return std::nullopt;

  std::vector<int> cyc;
  for (int seed = 0; seed < n; ++seed)
    if (detail::ham_cycle_rotation(g, seed, cyc)) return cyc;
  if (n <= 14 && detail::ham_cycle_exhaustive(g, cyc)) return cyc;
  return std::nullopt;
}

/// Hamilton path between prescribed endpoints, via a cycle in the graph
/// augmented with one apex vertex adjacent to exactly {s, t}.
inline std::optional<std::vector<int>> find_hamilton_path(const Graph& g,
                                                          int s, int t) {
  if (s == t) throw std::invalid_argument("endpoints must differ");
  int n = g.size();
  auto edges = g.edges();
  edges.emplace_back(n, s);
  edges.emplace_back(n, t);
  Graph aug(n + 1, edges);
  auto cyc = find_hamilton_cycle(aug);
  if (!cyc) return std::nullopt;
  // Rotate so the apex is first, then drop it; endpoints become s/t.
  auto& c = *cyc;
  int pos = int(std::find(c.begin(), c.end(), n) - c.begin());
  std::vector<int> path;
  for (int j = 1; j < int(c.size()); ++j) path.push_back(c[(pos + j) % c.size()]);
  if (path.front() == t) std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace evencycle
