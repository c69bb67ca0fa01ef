#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace evencycle {

/// Raised when a structure that is guaranteed to validate fails to do so.
/// Distinct from precondition errors: seeing one means a bug, not bad input.
struct defect_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Immutable simple undirected graph with bitset adjacency.
class Graph {
 public:
  Graph() = default;

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop rejected");
      if (!adj_[u].contains(v)) {
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++edge_count_;
      }
    }
  }

  static Graph empty(int n) { return Graph(n, {}); }

  static Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
  }

  static Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
  }

  static Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
  }

  /// Parts {0..a-1} and {a..a+b-1}.
  static Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
  }

  int size() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
        out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<VertexSet> adj_;
};

/// Ordered list of distinct vertices, consecutive ones adjacent in the host.
struct Path {
  std::vector<int> vertices;

  int length() const { return int(vertices.size()); }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }

  bool valid_in(const Graph& g) const {
    if (vertices.empty()) return false;
    VertexSet seen(g.size());
    for (size_t i = 0; i < vertices.size(); ++i) {
      int v = vertices[i];
      if (v < 0 || v >= g.size() || seen.contains(v)) return false;
      seen.insert(v);
      if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
    }
    return true;
  }

  /// Interior vertices (all but the endpoints).
  std::vector<int> interior() const {
    if (vertices.size() <= 2) return {};
    return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
  }
};

inline int min_degree(const Graph& g) {
  if (g.size() < 1) throw std::invalid_argument("min_degree needs n >= 1");
  int d = g.size();
  for (int v = 0; v < g.size(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline bool is_connected(const Graph& g) {
  if (g.size() == 0) return false;
  std::vector<int> stack{0};
  VertexSet seen(g.size());
  seen.insert(0);
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    g.neighbors(u).for_each([&](int v) {
      if (!seen.contains(v)) {
        seen.insert(v);
        ++count;
        stack.push_back(v);
      }
    });
  }
  return count == g.size();
}

namespace detail {

// Articulation-vertex test via DFS low-links (iterative).
inline bool has_articulation_vertex(const Graph& g) {
  int n = g.size();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), it(n, -1);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      int u = stack.back();
      int v = g.neighbors(u).next(it[u]);
      if (v < 0) {
        stack.pop_back();
        int p = parent[u];
        if (p >= 0) {
          low[p] = std::min(low[p], low[u]);
          if (p != root && low[u] >= disc[p]) return true;
          if (p == root && parent[u] == root) ++root_children;
        }
        continue;
      }
      it[u] = v;
      if (disc[v] == -1) {
        parent[v] = u;
        disc[v] = low[v] = timer++;
        stack.push_back(v);
      } else if (v != parent[u]) {
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (root_children >= 2) return true;
  }
  return false;
}

}  // namespace detail

/// Connected, n >= 3, and no articulation vertex.
inline bool is_2_connected(const Graph& g) {
  if (g.size() < 3) return false;
  if (!is_connected(g)) return false;
  return !detail::has_articulation_vertex(g);
}

/// Subgraph induced by s, plus the map from new ids to original ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;  // new id -> host id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("induced_subgraph: empty set");
  std::vector<int> to_host = s.to_vector();
  std::vector<int> to_sub(g.size(), -1);
  for (size_t i = 0; i < to_host.size(); ++i) to_sub[to_host[i]] = int(i);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < to_host.size(); ++i) {
    int u = to_host[i];
    for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
      if (to_sub[v] >= 0) edges.emplace_back(int(i), to_sub[v]);
  }
  return {Graph(int(to_host.size()), edges), std::move(to_host)};
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.size());
  for (int s = 0; s < g.size(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.size());
    std::vector<int> stack{s};
    seen.insert(s);
    comp.insert(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      g.neighbors(u).for_each([&](int v) {
        if (!seen.contains(v)) {
          seen.insert(v);
          comp.insert(v);
          stack.push_back(v);
        }
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

/// Proper 2-coloring if the graph is bipartite.
inline bool bipartition(const Graph& g, VertexSet& side_x, VertexSet& side_y) {
  std::vector<int> color(g.size(), -1);
  side_x = VertexSet(g.size());
  side_y = VertexSet(g.size());
  for (int s = 0; s < g.size(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      bool bad = false;
      g.neighbors(u).for_each([&](int v) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          bad = true;
        }
      });
      if (bad) return false;
    }
  }
  for (int v = 0; v < g.size(); ++v)
    (color[v] == 0 ? side_x : side_y).insert(v);
  return true;
}

}  // namespace evencycle
