#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace evencycle {

namespace detail {

// Minimal successive-shortest-path min-cost flow. Costs are nonnegative,
// capacities 0/1; sized for the vertex-split digraphs built below.
class MinCostFlow {
 public:
  explicit MinCostFlow(int n) : head_(n, -1) {}

  void add_arc(int u, int v, int cap, int cost) {
    arcs_.push_back({v, head_[u], cap, cost});
    head_[u] = int(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], 0, -cost});
    head_[v] = int(arcs_.size()) - 1;
  }

  // Sends up to `want` units from s to t; returns (flow, cost).
  std::pair<int, int> run(int s, int t, int want) {
    int flow = 0, cost = 0;
    while (flow < want) {
      // Bellman-Ford: residual costs can be negative after augmenting.
      int n = int(head_.size());
      std::vector<int> dist(n, std::numeric_limits<int>::max());
      std::vector<int> in_arc(n, -1);
      std::vector<char> in_queue(n, 0);
      std::deque<int> q{s};
      dist[s] = 0;
      in_queue[s] = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        in_queue[u] = 0;
        for (int a = head_[u]; a != -1; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.cap <= 0) continue;
          int nd = dist[u] + arc.cost;
          if (nd < dist[arc.to]) {
            dist[arc.to] = nd;
            in_arc[arc.to] = a;
            if (!in_queue[arc.to]) {
              in_queue[arc.to] = 1;
              q.push_back(arc.to);
            }
          }
        }
      }
      if (in_arc[t] == -1) break;
      for (int v = t; v != s;) {
        int a = in_arc[v];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        v = arcs_[a ^ 1].to;
      }
      ++flow;
      cost += dist[t];
    }
    return {flow, cost};
  }

  // Arcs with positive flow leaving u (forward arcs only).
  template <typename F>
  void for_each_flow_arc(int u, F&& fn) const {
    for (int a = head_[u]; a != -1; a = arcs_[a].next)
      if (!(a & 1) && arcs_[a ^ 1].cap > 0) fn(a, arcs_[a].to);
  }

  int arc_flow(int a) const { return arcs_[a ^ 1].cap; }
  void drain_arc(int a) {
    arcs_[a ^ 1].cap -= 1;
    arcs_[a].cap += 1;
  }

 private:
  struct Arc {
    int to, next, cap, cost;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

struct DisjointPathPair {
  Path first;
  Path second;
  int total_vertices() const { return first.length() + second.length(); }
};

/// Two vertex-disjoint u1-u2 paths minimizing the total vertex count, found
/// as a min-cost flow of value 2 on the vertex-split digraph (vertex use
/// costs one unit, so the optimum is exact for every n). Returns nullopt
/// when no two disjoint paths exist.
inline std::optional<DisjointPathPair> two_disjoint_paths(
    const Graph& g, const VertexSet& u1, const VertexSet& u2) {
  if (u1.intersects(u2))
    throw std::invalid_argument("two_disjoint_paths: sets must be disjoint");
  if (u1.size() < 2 || u2.size() < 2)
    throw std::invalid_argument("two_disjoint_paths: both sets need >= 2");

  int n = g.size();
  // Node layout: v_in = 2v, v_out = 2v+1, source = 2n, sink = 2n+1.
  detail::MinCostFlow mcf(2 * n + 2);
  int source = 2 * n, sink = 2 * n + 1;
  for (int v = 0; v < n; ++v) mcf.add_arc(2 * v, 2 * v + 1, 1, 1);
  for (auto [u, v] : g.edges()) {
    mcf.add_arc(2 * u + 1, 2 * v, 1, 0);
    mcf.add_arc(2 * v + 1, 2 * u, 1, 0);
  }
  u1.for_each([&](int v) { mcf.add_arc(source, 2 * v, 1, 0); });
  u2.for_each([&](int v) { mcf.add_arc(2 * v + 1, sink, 1, 0); });

  auto [flow, cost] = mcf.run(source, sink, 2);
  (void)cost;
  if (flow < 2) return std::nullopt;

  // Decompose the two units of flow into paths.
  DisjointPathPair out;
  for (Path* path : {&out.first, &out.second}) {
    std::vector<int> verts;
    int u = source;
    while (u != sink) {
      int next_node = -1, arc = -1;
      mcf.for_each_flow_arc(u, [&](int a, int to) {
        if (next_node == -1) {
          next_node = to;
          arc = a;
        }
      });
      if (arc == -1) throw defect_error("flow decomposition failed");
      mcf.drain_arc(arc);
      if (next_node != sink && (next_node & 1) == 0 && next_node < 2 * n)
        verts.push_back(next_node / 2);
      u = (next_node == sink) ? sink : next_node;
      if (u != sink && (u & 1) == 0) {
        // pass straight through the split arc
        int a2 = -1;
        mcf.for_each_flow_arc(u, [&](int a, int to) {
          if (a2 == -1 && to == u + 1) a2 = a;
        });
        if (a2 == -1) throw defect_error("flow decomposition failed");
        mcf.drain_arc(a2);
        u = u + 1;
      }
    }
    path->vertices = std::move(verts);
  }
  for (const Path* p : {&out.first, &out.second}) {
    if (!p->valid_in(g) || !u1.contains(p->front()) || !u2.contains(p->back()))
      throw defect_error("two_disjoint_paths produced an invalid path");
  }
  for (int v : out.first.vertices)
    if (std::find(out.second.vertices.begin(), out.second.vertices.end(), v) !=
        out.second.vertices.end())
      throw defect_error("two_disjoint_paths produced overlapping paths");
  return out;
}

/// Vertex connectivity. kappa(K_n) = n-1; 0 for disconnected or trivial.
inline int vertex_connectivity(const Graph& g) {
  int n = g.size();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  bool complete = true;
  for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
  if (complete) return n - 1;

  auto max_disjoint_paths = [&](int s, int t) {
    detail::MinCostFlow mcf(2 * n + 2);
    for (int v = 0; v < n; ++v)
      mcf.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1, 0);
    for (auto [u, v] : g.edges()) {
      mcf.add_arc(2 * u + 1, 2 * v, 1, 0);
      mcf.add_arc(2 * v + 1, 2 * u, 1, 0);
    }
    return mcf.run(2 * s, 2 * t + 1, n).first;
  };

  // kappa = min over non-adjacent pairs; fixing one low-degree vertex plus
  // scanning its non-neighbors covers a minimum separator.
  int best = n - 1;
  int s = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(s)) s = v;
  for (int t = 0; t < n; ++t)
    if (t != s && !g.adjacent(s, t))
      best = std::min(best, max_disjoint_paths(s, t));
  g.neighbors(s).for_each([&](int u) {
    for (int t = 0; t < n; ++t)
      if (t != u && t != s && !g.adjacent(u, t))
        best = std::min(best, max_disjoint_paths(u, t));
  });
  return best;
}

// ---------------------------------------------------------------------------
// Path trichotomy: Hamiltonian path of a component, or a path dominating all
// outside neighbors, or two disjoint paths with > 3*delta(G) vertices total.
// ---------------------------------------------------------------------------

struct HamPath {
  Path path;
};
struct DominatingPath {
  Path path;
};
struct TwoLongPaths {
  Path first;
  Path second;
};
using PathTrichotomy = std::variant<HamPath, DominatingPath, TwoLongPaths>;

namespace detail {

// Longest path in g by DP over vertex subsets; n <= 18. reach[mask] holds
// the endpoints of paths covering exactly `mask`, as a bitmask.
inline std::vector<int> longest_path_exact(const Graph& g) {
  int n = g.size();
  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](int w) { nbr[v] |= uint32_t(1) << w; });

  std::vector<uint32_t> reach(size_t(1) << n, 0);
  for (int v = 0; v < n; ++v) reach[size_t(1) << v] = uint32_t(1) << v;
  uint32_t best_mask = 1;
  int best_end = 0;
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
    uint32_t ends = reach[mask];
    if (!ends) continue;
    if (std::popcount(mask) > std::popcount(best_mask)) {
      best_mask = mask;
      best_end = std::countr_zero(ends);
    }
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      uint32_t fresh = nbr[v] & ~mask;
      while (fresh) {
        int w = std::countr_zero(fresh);
        fresh &= fresh - 1;
        reach[mask | (uint32_t(1) << w)] |= uint32_t(1) << w;
      }
    }
  }
  // Reconstruct.
  std::vector<int> path;
  uint32_t mask = best_mask;
  int v = best_end;
  path.push_back(v);
  while (std::popcount(mask) > 1) {
    uint32_t prev_mask = mask & ~(uint32_t(1) << v);
    uint32_t cands = reach[prev_mask] & nbr[v];
    v = std::countr_zero(cands);
    mask = prev_mask;
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Grow a path greedily with rotations (bounded effort); used above the
// exact-search threshold.
inline std::vector<int> long_path_heuristic(const Graph& g, int start) {
  std::vector<int> path{start};
  VertexSet on_path(g.size());
  on_path.insert(start);
  auto extend = [&]() {
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
  extend();
  for (int rounds = 0; rounds < 2 * g.size(); ++rounds) {
    // rotate at the back endpoint and try to extend again
    int y = path.back();
    bool rotated = false;
    for (size_t i = 0; i + 2 < path.size() && !rotated; ++i) {
      if (!g.adjacent(y, path[i])) continue;
      // candidate new endpoint path[i+1]
      int cand = path[i + 1];
      bool cand_extends = false;
      g.neighbors(cand).for_each([&](int w) {
        if (!on_path.contains(w)) cand_extends = true;
      });
      if (cand_extends) {
        std::reverse(path.begin() + i + 1, path.end());
        rotated = true;
      }
    }
    if (!rotated) break;
    extend();
  }
  return path;
}

}  // namespace detail

/// One of the three witnesses, preferred in the order HamPath >
/// DominatingPath > TwoLongPaths. A witness is guaranteed to exist when
/// |component| >= 2*delta(g); smaller components are still attempted and
/// the size precondition is only reported when no witness comes out. The
/// search is exact for components of up to 18 vertices, greedy beyond.
inline PathTrichotomy path_trichotomy(const Graph& g,
                                      const VertexSet& component) {
  int delta = min_degree(g);
  auto sub = induced_subgraph(g, component);
  if (!is_connected(sub.graph))
    throw std::invalid_argument("path_trichotomy: set is not connected");

  auto lift = [&](const std::vector<int>& vs) {
    Path p;
    for (int v : vs) p.vertices.push_back(sub.to_host[v]);
    return p;
  };

  std::vector<int> p1;
  if (sub.graph.size() <= 18) {
    p1 = detail::longest_path_exact(sub.graph);
  } else {
    for (int s = 0; s < sub.graph.size(); ++s) {
      auto cand = detail::long_path_heuristic(sub.graph, s);
      if (cand.size() > p1.size()) p1 = cand;
      if (int(p1.size()) == sub.graph.size()) break;
    }
  }

  if (int(p1.size()) == sub.graph.size()) return HamPath{lift(p1)};

  VertexSet outside = VertexSet::full(sub.graph.size());
  for (int v : p1) outside.erase(v);
  bool dominating = true;
  outside.for_each([&](int v) {
    if (sub.graph.neighbors(v).intersects(outside)) dominating = false;
  });
  if (dominating) return DominatingPath{lift(p1)};

  auto rest = induced_subgraph(sub.graph, outside);
  std::vector<int> p2sub;
  if (rest.graph.size() <= 18) {
    p2sub = detail::longest_path_exact(rest.graph);
  } else {
    for (int s = 0; s < rest.graph.size(); ++s) {
      auto cand = detail::long_path_heuristic(rest.graph, s);
      if (cand.size() > p2sub.size()) p2sub = cand;
    }
  }
  std::vector<int> p2;
  for (int v : p2sub) p2.push_back(rest.to_host[v]);

  if (int(p1.size() + p2.size()) > 3 * delta)
    return TwoLongPaths{lift(p1), lift(p2)};
  if (component.size() < 2 * delta)
    throw std::invalid_argument("path_trichotomy: component below 2*delta");
  throw defect_error("path_trichotomy: no witness found");
}

}  // namespace evencycle
