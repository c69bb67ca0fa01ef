#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace evencycle {
namespace detail {

/// Maximum bipartite matching (augmenting paths, deterministic vertex
/// order) between `left` and `right` inside g. Returns pairs (l, r).
inline std::vector<std::pair<int, int>> bipartite_matching(
    const Graph& g, const std::vector<int>& left,
    const std::vector<int>& right) {
  std::vector<int> right_of(g.size(), -1);  // left vertex -> matched right
  std::vector<int> left_of(g.size(), -1);
  std::vector<char> in_right(g.size(), 0);
  for (int r : right) in_right[r] = 1;

  std::vector<char> visited(g.size(), 0);
  auto try_augment = [&](auto&& self, int l) -> bool {
    for (int r = g.neighbors(l).first(); r >= 0; r = g.neighbors(l).next(r)) {
      if (!in_right[r] || visited[r]) continue;
      visited[r] = 1;
      if (left_of[r] == -1 || self(self, left_of[r])) {
        left_of[r] = l;
        right_of[l] = r;
        return true;
      }
    }
    return false;
  };

  for (int l : left) {
    std::fill(visited.begin(), visited.end(), 0);
    try_augment(try_augment, l);
  }
  std::vector<std::pair<int, int>> out;
  for (int l : left)
    if (right_of[l] != -1) out.emplace_back(l, right_of[l]);
  return out;
}

/// Saturating variant: nullopt unless every left vertex is matched.
inline std::optional<std::vector<std::pair<int, int>>> saturating_matching(
    const Graph& g, const std::vector<int>& left,
    const std::vector<int>& right) {
  auto m = bipartite_matching(g, left, right);
  if (m.size() != left.size()) return std::nullopt;
  return m;
}

}  // namespace detail
}  // namespace evencycle
