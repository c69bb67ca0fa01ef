#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "graph.hpp"

namespace evencycle {

namespace detail {

// Upper-triangle bit packing of a labeled graph on n <= 10 vertices: row k
// contributes k bits (adjacency to positions 0..k-1, position 0 most
// significant inside the row).
inline uint64_t labeled_code(const Graph& g, const std::vector<int>& perm) {
  uint64_t code = 0;
  int n = int(perm.size());
  for (int k = 1; k < n; ++k) {
    uint64_t row = 0;
    for (int i = 0; i < k; ++i)
      row = (row << 1) | uint64_t(g.adjacent(perm[k], perm[i]));
    code = (code << k) | row;
  }
  return code;
}

}  // namespace detail

/// Canonical form: the lexicographically smallest upper-triangle code over
/// all degree-sorted vertex orderings. Branch and bound explores only the
/// candidates achieving the minimal next row, with twin vertices collapsed
/// (swapping twins is an automorphism, so one representative suffices).
inline uint64_t canonical_code(const Graph& g) {
  int n = g.size();
  if (n > 10) throw std::invalid_argument("canonical_code supports n <= 10");
  if (n <= 1) return 0;

  std::vector<int> dseq(n);
  for (int v = 0; v < n; ++v) dseq[v] = g.degree(v);
  std::sort(dseq.begin(), dseq.end());

  // twin relation: N(u) \ {v} == N(v) \ {u}
  std::vector<std::vector<char>> twin(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      VertexSet nu = g.neighbors(u);
      VertexSet nv = g.neighbors(v);
      nu.erase(v);
      nv.erase(u);
      if (nu == nv) twin[u][v] = twin[v][u] = 1;
    }

  std::vector<uint64_t> best_rows;
  std::vector<uint64_t> rows;
  std::vector<int> perm;
  std::vector<char> used(n, 0);

  auto dfs = [&](auto&& self, int pos, bool tied) -> void {
    if (pos == n) {
      // `tied` can be stale after an incumbent update elsewhere in the
      // tree, so the final acceptance compares in full
      if (best_rows.empty() || rows < best_rows) best_rows = rows;
      return;
    }
    // candidates: unused vertices of the required degree, minimal row only
    uint64_t min_row = ~uint64_t{0};
    std::vector<std::pair<uint64_t, int>> cands;
    for (int v = 0; v < n; ++v) {
      if (used[v] || g.degree(v) != dseq[pos]) continue;
      uint64_t row = 0;
      for (int i = 0; i < pos; ++i)
        row = (row << 1) | uint64_t(g.adjacent(v, perm[i]));
      if (row < min_row) min_row = row;
      cands.push_back({row, v});
    }
    if (cands.empty()) return;
    bool next_tied = tied;
    if (!best_rows.empty() && tied) {
      if (min_row > best_rows[pos]) return;  // cannot beat the incumbent
      next_tied = min_row == best_rows[pos];
    }
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      auto [row, v] = cands[ci];
      if (row != min_row) continue;
      bool twin_skip = false;
      for (size_t cj = 0; cj < ci && !twin_skip; ++cj)
        if (cands[cj].first == min_row && twin[cands[cj].second][v] &&
            !used[cands[cj].second])
          twin_skip = true;
      if (twin_skip) continue;
      used[v] = 1;
      perm.push_back(v);
      rows.push_back(row);
      self(self, pos + 1, next_tied);
      rows.pop_back();
      perm.pop_back();
      used[v] = 0;
    }
  };
  dfs(dfs, 0, true);

  uint64_t code = 0;
  for (int k = 1; k < n; ++k) code = (code << k) | best_rows[k];
  return code;
}

/// Rebuild a graph from its packed upper-triangle code.
inline Graph graph_from_code(uint64_t code, int n) {
  std::vector<std::pair<int, int>> edges;
  int shift = n * (n - 1) / 2;
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < k; ++i) {
      --shift;
      if (code >> shift & 1) edges.emplace_back(k, i);
    }
  }
  return Graph(n, edges);
}

/// Graphs up to isomorphism for every order 1..n_max, by augmenting each
/// (k-1)-vertex representative with one new vertex over every neighborhood
/// subset and deduplicating on canonical codes. levels[k] holds the sorted
/// codes of the k-vertex graphs, so iteration order is stable.
inline std::vector<std::vector<uint64_t>> enumerate_graph_levels(int n_max) {
  if (n_max < 1 || n_max > 10)
    throw std::invalid_argument("enumeration supports 1 <= n_max <= 10");
  std::vector<std::vector<uint64_t>> levels(n_max + 1);
  levels[1] = {0};  // the single 1-vertex graph
  for (int k = 2; k <= n_max; ++k) {
    std::set<uint64_t> next;
    for (uint64_t code : levels[k - 1]) {
      Graph base = graph_from_code(code, k - 1);
      auto base_edges = base.edges();
      for (uint32_t mask = 0; mask < (uint32_t(1) << (k - 1)); ++mask) {
        auto edges = base_edges;
        for (int i = 0; i < k - 1; ++i)
          if (mask >> i & 1) edges.emplace_back(k - 1, i);
        next.insert(canonical_code(Graph(k, edges)));
      }
    }
    levels[k].assign(next.begin(), next.end());
  }
  return levels;
}

/// All graphs on exactly n vertices up to isomorphism.
inline std::vector<uint64_t> enumerate_graph_codes(int n) {
  return enumerate_graph_levels(n).back();
}

/// Visit every graph on n vertices up to isomorphism in canonical order.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  for (uint64_t code : enumerate_graph_codes(n)) fn(graph_from_code(code, n));
}

}  // namespace evencycle
