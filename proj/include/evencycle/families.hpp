#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "disjoint_paths.hpp"
#include "graph.hpp"
#include "ladder.hpp"

namespace evencycle {

enum class Family { ex1, ex2, par4p2, par4p1 };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::ex1: return "ex1";
    case Family::ex2: return "ex2";
    case Family::par4p2: return "par4p2";
    case Family::par4p1: return "par4p1";
  }
  return "?";
}

/// Checkable witness for an obstruction family instance: the claimed
/// minimum degree and connectivity are re-verified against the generated
/// graph on construction, so holding a cert means the claims are real.
struct ExtremalFamilyCert {
  Family family;
  std::map<std::string, int> params;
  int claimed_min_degree = 0;
  int claimed_connectivity = 0;
  TargetPartition blocked_partition;

  ExtremalFamilyCert(Family f, std::map<std::string, int> p, int delta,
                     int kappa, TargetPartition blocked, const Graph& g)
      : family(f), params(std::move(p)), claimed_min_degree(delta),
        claimed_connectivity(kappa), blocked_partition(std::move(blocked)) {
    if (min_degree(g) != claimed_min_degree)
      throw defect_error("family cert: min degree mismatch");
    if (vertex_connectivity(g) != claimed_connectivity)
      throw defect_error("family cert: connectivity mismatch");
  }
};

inline nlohmann::json to_json(const ExtremalFamilyCert& c) {
  return nlohmann::json{{"family", family_name(c.family)},
                        {"params", c.params},
                        {"min_degree", c.claimed_min_degree},
                        {"connectivity", c.claimed_connectivity},
                        {"blocked_partition", c.blocked_partition.targets}};
}

/// l cliques K_{q-2} plus three hubs joined to every non-hub vertex, with k
/// of the three hub-hub edges present. Blocks two disjoint copies of C_q.
/// Vertex numbering: cliques first, hubs last.
inline std::pair<Graph, ExtremalFamilyCert> gen_example1(int l, int q, int k) {
  if (l < 2) throw std::invalid_argument("need l >= 2");
  if (q < 4 || q % 2 != 0) throw std::invalid_argument("need q >= 4 even");
  if (k < 0 || k > 3) throw std::invalid_argument("need k in 0..3");
  if (l * (q - 2) + k < q)
    throw std::invalid_argument("hub degrees would fall below q");

  int body = l * (q - 2);
  int n = body + 3;
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < l; ++c)
    for (int u = c * (q - 2); u < (c + 1) * (q - 2); ++u)
      for (int v = u + 1; v < (c + 1) * (q - 2); ++v) edges.emplace_back(u, v);
  for (int h = body; h < n; ++h)
    for (int v = 0; v < body; ++v) edges.emplace_back(h, v);
  const std::pair<int, int> hub_pairs[3] = {
      {body, body + 1}, {body, body + 2}, {body + 1, body + 2}};
  for (int i = 0; i < k; ++i) edges.push_back(hub_pairs[i]);

  Graph g(n, edges);
  ExtremalFamilyCert cert(Family::ex1, {{"l", l}, {"q", q}, {"k", k}}, q, 3,
                          TargetPartition({q / 2, q / 2}), g);
  return {std::move(g), std::move(cert)};
}

/// K_{q-1} fully joined to an even independent-but-matched side of size
/// n-q+1. The maximal member of its family; subgraph variants are handled
/// by the detector. Blocks q/2 disjoint copies of C_4.
inline std::pair<Graph, ExtremalFamilyCert> gen_example2(int q, int n) {
  if (q < 4 || q % 2 != 0) throw std::invalid_argument("need q >= 4 even");
  int v_size = n - q + 1;
  if (v_size < 2 || v_size % 2 != 0)
    throw std::invalid_argument("need n - q + 1 even and >= 2");

  int u_size = q - 1;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < u_size; ++u)
    for (int v = u + 1; v < u_size; ++v) edges.emplace_back(u, v);
  for (int u = 0; u < u_size; ++u)
    for (int v = u_size; v < n; ++v) edges.emplace_back(u, v);
  for (int v = u_size; v < n; v += 2) edges.emplace_back(v, v + 1);

  Graph g(n, edges);
  int kappa = (v_size == 2) ? q : q - 1;  // v_size == 2 degenerates to K_n
  std::vector<int> blocked(q / 2, 2);
  ExtremalFamilyCert cert(Family::ex2, {{"q", q}, {"n", n}}, q, kappa,
                          TargetPartition(blocked), g);
  return {std::move(g), std::move(cert)};
}

/// Two near-cliques of size 2p+1 (one non-edge each) joined by two bridge
/// edges; for odd p it has no p disjoint copies of C_4. n = 4p+2.
inline std::pair<Graph, ExtremalFamilyCert> gen_parity_4p2(int p) {
  if (p < 3 || p % 2 != 1) throw std::invalid_argument("need p odd, >= 3");
  int side = 2 * p + 1;
  int n = 2 * side;
  std::vector<std::pair<int, int>> edges;
  // side one: vertices 0..2p, v1 = 0, v2 = 1; all pairs except {0,1}
  for (int u = 0; u < side; ++u)
    for (int v = u + 1; v < side; ++v)
      if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
  // side two: vertices 2p+1..4p+1, u1 = 2p+1, u2 = 2p+2
  for (int u = side; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u == side && v == side + 1)) edges.emplace_back(u, v);
  edges.emplace_back(0, side);
  edges.emplace_back(1, side + 1);

  Graph g(n, edges);
  std::vector<int> blocked(p, 2);
  ExtremalFamilyCert cert(Family::par4p2, {{"p", p}}, 2 * p, 2,
                          TargetPartition(blocked), g);
  return {std::move(g), std::move(cert)};
}

/// Two copies of K_{2p} joined by one bridge edge plus an apex adjacent to
/// everything except the bridge endpoints; for odd p it has no p disjoint
/// copies of C_4. n = 4p+1.
inline std::pair<Graph, ExtremalFamilyCert> gen_parity_4p1(int p) {
  if (p < 3 || p % 2 != 1) throw std::invalid_argument("need p odd, >= 3");
  int side = 2 * p;
  int n = 2 * side + 1;
  int apex = n - 1;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < side; ++u)
    for (int v = u + 1; v < side; ++v) edges.emplace_back(u, v);
  for (int u = side; u < 2 * side; ++u)
    for (int v = u + 1; v < 2 * side; ++v) edges.emplace_back(u, v);
  edges.emplace_back(0, side);  // bridge between the copies
  for (int v = 0; v < 2 * side; ++v)
    if (v != 0 && v != side) edges.emplace_back(apex, v);

  Graph g(n, edges);
  std::vector<int> blocked(p, 2);
  ExtremalFamilyCert cert(Family::par4p1, {{"p", p}}, 2 * p, 2,
                          TargetPartition(blocked), g);
  return {std::move(g), std::move(cert)};
}

struct Ex1Params {
  int l = 0, q = 0, k = 0;
};

/// Exact structural match against the three-hub family: a triple adjacent
/// to every other vertex whose removal leaves l >= 2 equal cliques.
inline std::optional<Ex1Params> detect_example1(const Graph& g) {
  int n = g.size();
  if (n < 7) return std::nullopt;
  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= n - 3) cand.push_back(v);
  for (size_t i = 0; i < cand.size(); ++i)
    for (size_t j = i + 1; j < cand.size(); ++j)
      for (size_t m = j + 1; m < cand.size(); ++m) {
        int h1 = cand[i], h2 = cand[j], h3 = cand[m];
        VertexSet rest = VertexSet::full(n);
        rest.erase(h1);
        rest.erase(h2);
        rest.erase(h3);
        bool hubs_ok = true;
        for (int h : {h1, h2, h3}) {
          VertexSet missing = rest;
          missing -= g.neighbors(h);
          if (!missing.empty()) hubs_ok = false;
        }
        if (!hubs_ok) continue;
        auto sub = induced_subgraph(g, rest);
        auto comps = connected_components(sub.graph);
        if (comps.size() < 2) continue;
        int csize = comps[0].size();
        bool cliques = true;
        for (const auto& comp : comps) {
          if (comp.size() != csize) {
            cliques = false;
            break;
          }
          comp.for_each([&](int v) {
            if (sub.graph.neighbors(v).intersection_size(comp) != csize - 1)
              cliques = false;
          });
        }
        if (!cliques || csize < 2) continue;
        int q = csize + 2;
        if (q % 2 != 0) continue;
        int k = int(g.adjacent(h1, h2)) + int(g.adjacent(h1, h3)) +
                int(g.adjacent(h2, h3));
        return Ex1Params{int(comps.size()), q, k};
      }
  return std::nullopt;
}

struct Ex2Params {
  int q = 0, n = 0;
};

/// Subgraph-of-the-bipartite-family test: a side U of size q-1 fully joined
/// to the even-sized rest, which induces maximum degree <= 1.
inline std::optional<Ex2Params> detect_example2(const Graph& g) {
  int n = g.size();
  for (int s = 3; n - s >= 2; s += 2) {  // s = q-1 odd so q is even
    if ((n - s) % 2 != 0) continue;
    VertexSet v_side(n);
    int count = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) <= s + 1) {
        v_side.insert(v);
        ++count;
      }
    if (count != n - s) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (v_side.contains(u)) {
        if (g.neighbors(u).intersection_size(v_side) > 1) ok = false;
      } else {
        VertexSet missing = v_side;
        missing -= g.neighbors(u);
        if (!missing.empty()) ok = false;
      }
    }
    if (ok) return Ex2Params{s + 1, n};
  }
  return std::nullopt;
}

}  // namespace evencycle
