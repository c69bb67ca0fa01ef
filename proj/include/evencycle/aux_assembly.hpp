#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "hamilton.hpp"
#include "ladder.hpp"

namespace evencycle {
namespace detail {

// Rung orientation is fixed here (columns are the two sides of a
// bipartition-like split), so two consecutive rungs are compatible exactly
// when both cross edges exist.
inline bool rung_compat(const Graph& g, std::pair<int, int> r1,
                        std::pair<int, int> r2) {
  return g.adjacent(r1.first, r2.second) && g.adjacent(r1.second, r2.first);
}

/// Auxiliary-graph node: a pre-built mini ladder of 1..3 rungs with fixed
/// column orientation. `end_only` nodes have one unusable outer rung and
/// must sit at an end of the assembled sequence, entry rung first.
struct FixedNode {
  std::vector<std::pair<int, int>> rungs;
  bool end_only = false;

  std::pair<int, int> entry(bool fwd) const {
    return fwd ? rungs.front() : rungs.back();
  }
  std::pair<int, int> exit(bool fwd) const {
    return fwd ? rungs.back() : rungs.front();
  }
};

// Emit node's rungs in traversal order.
inline void emit_node(const FixedNode& nd, bool fwd,
                      std::vector<std::pair<int, int>>& out) {
  if (fwd)
    out.insert(out.end(), nd.rungs.begin(), nd.rungs.end());
  else
    out.insert(out.end(), nd.rungs.rbegin(), nd.rungs.rend());
}

// Resolve traversal directions along a fixed node sequence (DFS with
// 2 options per node), optionally forcing the first node's entry rung to
// follow `after`. Returns the unrolled rung sequence.
inline std::optional<std::vector<std::pair<int, int>>> unroll_sequence(
    const Graph& g, const std::vector<FixedNode>& nodes,
    const std::vector<int>& seq,
    std::optional<std::pair<int, int>> after) {
  std::vector<int> dirs(seq.size(), -1);
  std::vector<std::pair<int, int>> result;

  auto dfs = [&](auto&& self, size_t pos,
                 std::optional<std::pair<int, int>> prev) -> bool {
    if (pos == seq.size()) return true;
    const FixedNode& nd = nodes[seq[pos]];
    for (int d : {1, 0}) {
      bool fwd = d == 1;
      if (nd.end_only) {
        // the outer rung (rungs.back()) must face outward: reversed at the
        // front of the sequence, forward at its end, never interior
        bool first = pos == 0, last = pos + 1 == seq.size();
        if (!first && !last) return false;
        if (first && !last && fwd) continue;
        if (last && !first && !fwd) continue;
      }
      if (prev && !rung_compat(g, *prev, nd.entry(fwd))) continue;
      dirs[pos] = d;
      if (self(self, pos + 1, nd.exit(fwd))) return true;
    }
    return false;
  };

  if (!dfs(dfs, 0, after)) return std::nullopt;
  for (size_t i = 0; i < seq.size(); ++i)
    emit_node(nodes[seq[i]], dirs[i] == 1, result);
  return result;
}

/// Assembles all nodes into one rung sequence:
///  - builds the auxiliary graph (node adjacency = some direction pair is
///    rung-compatible; end_only outer rungs never used as junctions),
///  - finds a Hamilton cycle (or a Hamilton path ending at the end_only
///    nodes when those are present),
///  - cuts and unrolls, optionally attaching right after `prefix_last`.
inline std::optional<std::vector<std::pair<int, int>>> assemble_fixed_nodes(
    const Graph& g, const std::vector<FixedNode>& nodes,
    std::optional<std::pair<int, int>> prefix_last) {
  int h = int(nodes.size());
  if (h == 0) return std::vector<std::pair<int, int>>{};

  std::vector<int> ends;
  for (int i = 0; i < h; ++i)
    if (nodes[i].end_only) ends.push_back(i);
  if (ends.size() > 2) return std::nullopt;
  if (!ends.empty() && prefix_last) return std::nullopt;  // unsupported mix

  auto link = [&](int i, int j) {
    for (bool fi : {true, false})
      for (bool fj : {true, false}) {
        // an end_only node links through its first rung alone
        if (nodes[i].end_only && fi) continue;   // exit(false) = front rung
        if (nodes[j].end_only && !fj) continue;  // entry(true) = front rung
        if (rung_compat(g, nodes[i].exit(fi), nodes[j].entry(fj))) return true;
      }
    return false;
  };
  // symmetric closure: sequences may traverse either way
  auto linked = [&](int i, int j) { return link(i, j) || link(j, i); };

  std::vector<int> mid;
  for (int i = 0; i < h; ++i)
    if (!nodes[i].end_only) mid.push_back(i);

  // Order the non-end nodes along a Hamilton cycle of the auxiliary graph.
  std::vector<int> cyc;
  if (mid.size() == 1) {
    cyc = {mid[0]};
  } else if (mid.size() == 2) {
    if (!linked(mid[0], mid[1])) return std::nullopt;
    cyc = {mid[0], mid[1]};
  } else if (!mid.empty()) {
    std::vector<std::pair<int, int>> hedges;
    for (size_t i = 0; i < mid.size(); ++i)
      for (size_t j = i + 1; j < mid.size(); ++j)
        if (linked(mid[i], mid[j])) hedges.emplace_back(int(i), int(j));
    Graph haux(int(mid.size()), hedges);
    auto hc = find_hamilton_cycle(haux);
    if (!hc) return std::nullopt;
    for (int idx : *hc) cyc.push_back(mid[idx]);
  }

  int m = int(cyc.size());
  auto try_sequences = [&](auto&& accept)
      -> std::optional<std::vector<std::pair<int, int>>> {
    for (int start = 0; start < std::max(m, 1); ++start) {
      for (int dir : {1, -1}) {
        std::vector<int> seq;
        for (int j = 0; j < m; ++j)
          seq.push_back(cyc[((start + dir * j) % m + m) % m]);
        auto res = accept(seq);
        if (res) return res;
        if (m == 0) break;
      }
      if (m == 0) break;
    }
    return std::nullopt;
  };

  if (ends.empty()) {
    return try_sequences([&](std::vector<int>& seq) {
      return unroll_sequence(g, nodes, seq, prefix_last);
    });
  }
  if (ends.size() == 1) {
    return try_sequences([&](std::vector<int>& seq) {
      std::vector<int> full = seq;
      full.push_back(ends[0]);
      return unroll_sequence(g, nodes, full, std::nullopt);
    });
  }
  return try_sequences([&](std::vector<int>& seq) {
    std::vector<int> full{ends[0]};
    full.insert(full.end(), seq.begin(), seq.end());
    full.push_back(ends[1]);
    auto res = unroll_sequence(g, nodes, full, std::nullopt);
    if (res) return res;
    std::swap(full.front(), full.back());
    std::reverse(full.begin() + 1, full.end() - 1);
    return unroll_sequence(g, nodes, full, std::nullopt);
  });
}

}  // namespace detail
}  // namespace evencycle
