#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace evencycle {

/// Ladder embedded in a host graph: columns a_1..a_n, b_1..b_n with a_i b_j
/// an edge whenever |i-j| <= 1. The pairs {a_i, b_i} are the rungs.
struct Ladder {
  std::vector<int> a;
  std::vector<int> b;

  Ladder() = default;
  Ladder(std::vector<int> a_col, std::vector<int> b_col)
      : a(std::move(a_col)), b(std::move(b_col)) {}

  int rungs() const { return int(a.size()); }
  std::pair<int, int> rung(int i) const { return {a[i], b[i]}; }
  std::pair<int, int> first_rung() const { return {a.front(), b.front()}; }
  std::pair<int, int> last_rung() const { return {a.back(), b.back()}; }

  bool validate(const Graph& g) const {
    if (a.size() != b.size() || a.empty()) return false;
    VertexSet seen(g.size());
    for (int v : a) {
      if (v < 0 || v >= g.size() || seen.contains(v)) return false;
      seen.insert(v);
    }
    for (int v : b) {
      if (v < 0 || v >= g.size() || seen.contains(v)) return false;
      seen.insert(v);
    }
    int n = rungs();
    for (int i = 0; i < n; ++i)
      for (int j = std::max(0, i - 1); j <= std::min(n - 1, i + 1); ++j)
        if (!g.adjacent(a[i], b[j])) return false;
    return true;
  }

  /// Sub-ladder on rungs [from, from+len).
  Ladder slice(int from, int len) const {
    return Ladder(std::vector<int>(a.begin() + from, a.begin() + from + len),
                  std::vector<int>(b.begin() + from, b.begin() + from + len));
  }

  Ladder reversed() const {
    Ladder r = *this;
    std::reverse(r.a.begin(), r.a.end());
    std::reverse(r.b.begin(), r.b.end());
    return r;
  }

  std::vector<int> all_vertices() const {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  /// Throws on invalid structure; used by constructors of derived objects.
  void require_valid(const Graph& g) const {
    if (!validate(g)) throw defect_error("ladder fails host validation");
  }
};

/// Cycle on the 2m vertices of rungs [from, from+m): snake out along
/// alternating columns and back. Valid in any ladder.
inline std::vector<int> ladder_block_cycle(const Ladder& lad, int from, int m) {
  if (m < 2 || from < 0 || from + m > lad.rungs())
    throw std::invalid_argument("ladder_block_cycle: bad block");
  std::vector<int> cyc;
  for (int i = 0; i < m; ++i)
    cyc.push_back(i % 2 == 0 ? lad.a[from + i] : lad.b[from + i]);
  for (int i = m - 1; i >= 0; --i)
    cyc.push_back(i % 2 == 0 ? lad.b[from + i] : lad.a[from + i]);
  return cyc;
}

/// Hamilton path of rungs [from, from+m) from a_from to b_from (the snake
/// cycle opened at its closing rung edge).
inline std::vector<int> ladder_block_path(const Ladder& lad, int from, int m) {
  if (m < 1 || from < 0 || from + m > lad.rungs())
    throw std::invalid_argument("ladder_block_path: bad block");
  if (m == 1) return {lad.a[from], lad.b[from]};
  auto cyc = ladder_block_cycle(lad, from, m);
  // cyc starts at a_from and ends at b_from already
  return cyc;
}

/// Multiset of requested half-lengths n_1 <= ... <= n_l, each >= 2; the
/// request is for disjoint cycles C_{2 n_i}.
struct TargetPartition {
  std::vector<int> targets;  // kept sorted ascending

  TargetPartition() = default;
  explicit TargetPartition(std::vector<int> parts) : targets(std::move(parts)) {
    for (int t : targets)
      if (t < 2) throw std::invalid_argument("every target must be >= 2");
    std::sort(targets.begin(), targets.end());
  }

  int sum() const { return std::accumulate(targets.begin(), targets.end(), 0); }
  int count() const { return int(targets.size()); }
  bool empty() const { return targets.empty(); }
};

/// Vertex-disjoint cycles realizing a target partition: cycle i has length
/// 2 * targets[i].
struct CyclePacking {
  std::vector<std::vector<int>> cycles;

  bool validate(const Graph& g, const TargetPartition& t) const {
    if (int(cycles.size()) != t.count()) return false;
    VertexSet used(g.size());
    for (int i = 0; i < int(cycles.size()); ++i) {
      const auto& c = cycles[i];
      if (int(c.size()) != 2 * t.targets[i]) return false;
      for (size_t j = 0; j < c.size(); ++j) {
        int v = c[j];
        if (v < 0 || v >= g.size() || used.contains(v)) return false;
        used.insert(v);
        if (!g.adjacent(v, c[(j + 1) % c.size()])) return false;
      }
    }
    return true;
  }

  void require_valid(const Graph& g, const TargetPartition& t) const {
    if (!validate(g, t)) throw defect_error("cycle packing fails validation");
  }
};

/// Two ladders whose first rungs are joined by two interior-disjoint paths
/// with 2k interior vertices in total: p1 joins the a-endpoints, p2 the
/// b-endpoints. A plain n-ladder is the degenerate form with l2 empty and
/// k = 0.
struct WeakLadder {
  Ladder l1;
  Ladder l2;  // may be empty (0 rungs)
  Path p1;    // a-side connector, first vertex in l1, last in l2
  Path p2;    // b-side connector
  int k = 0;

  int total_rungs() const { return l1.rungs() + l2.rungs(); }

  WeakLadder() = default;

  /// Plain ladder as a (n, 0)-weak ladder.
  explicit WeakLadder(Ladder single) : l1(std::move(single)) {}

  WeakLadder(Ladder first, Ladder second, Path a_conn, Path b_conn)
      : l1(std::move(first)), l2(std::move(second)), p1(std::move(a_conn)),
        p2(std::move(b_conn)) {
    if (l1.rungs() == 0 || l2.rungs() == 0)
      throw std::invalid_argument("connected form needs two nonempty ladders");
    int interior = int(p1.interior().size() + p2.interior().size());
    if (interior % 2 != 0)
      throw std::invalid_argument("connector interiors must total 2k");
    k = interior / 2;
    // Keep l1 the smaller ladder; ties by smallest first-rung vertex id.
    bool swap_sides = l1.rungs() > l2.rungs() ||
                      (l1.rungs() == l2.rungs() &&
                       std::min(l1.a[0], l1.b[0]) > std::min(l2.a[0], l2.b[0]));
    if (swap_sides) {
      std::swap(l1, l2);
      std::reverse(p1.vertices.begin(), p1.vertices.end());
      std::reverse(p2.vertices.begin(), p2.vertices.end());
    }
  }

  bool validate(const Graph& g) const {
    if (!l1.validate(g)) return false;
    if (l2.rungs() == 0) return k == 0 && p1.vertices.empty() &&
                                p2.vertices.empty();
    if (!l2.validate(g)) return false;
    if (!p1.valid_in(g) || !p2.valid_in(g)) return false;
    if (p1.front() != l1.a[0] || p1.back() != l2.a[0]) return false;
    if (p2.front() != l1.b[0] || p2.back() != l2.b[0]) return false;
    // interiors disjoint from each other and from both ladders
    VertexSet body(g.size());
    for (int v : l1.all_vertices()) body.insert(v);
    for (int v : l2.all_vertices()) body.insert(v);
    VertexSet ints(g.size());
    for (const Path* p : {&p1, &p2}) {
      for (int v : p->interior()) {
        if (body.contains(v) || ints.contains(v)) return false;
        ints.insert(v);
      }
    }
    return int(p1.interior().size() + p2.interior().size()) == 2 * k;
  }

  void require_valid(const Graph& g) const {
    if (!validate(g)) throw defect_error("weak ladder fails host validation");
  }
};

/// Cycle through the connectors, the first m1 rungs of l1 and the first c
/// rungs of l2; its length is 2*(m1 + c + k). Requires m1, c >= 1.
inline std::vector<int> weak_ladder_junction_cycle(const WeakLadder& w, int m1,
                                                   int c) {
  if (w.l2.rungs() == 0)
    throw std::invalid_argument("junction cycle needs two ladders");
  if (m1 < 1 || m1 > w.l1.rungs() || c < 1 || c > w.l2.rungs())
    throw std::invalid_argument("junction cycle: bad rung counts");
  // a1 --p1--> a1'; snake l2 block back to b1'; --p2 reversed--> b1;
  // snake l1 block back to a1.
  std::vector<int> cyc;
  cyc.insert(cyc.end(), w.p1.vertices.begin(), w.p1.vertices.end() - 1);
  auto right = ladder_block_path(w.l2, 0, c);  // a1' .. b1'
  cyc.insert(cyc.end(), right.begin(), right.end());
  cyc.insert(cyc.end(), w.p2.vertices.rbegin() + 1, w.p2.vertices.rend() - 1);
  auto left = ladder_block_path(w.l1, 0, m1);  // a1 .. b1
  cyc.insert(cyc.end(), left.rbegin(), left.rend() - 1);
  return cyc;
}

// --- JSON ------------------------------------------------------------------

inline nlohmann::json to_json(const Ladder& lad) {
  nlohmann::json rungs = nlohmann::json::array();
  for (int i = 0; i < lad.rungs(); ++i)
    rungs.push_back({lad.a[i], lad.b[i]});
  return nlohmann::json{{"rungs", rungs}};
}

inline Ladder ladder_from_json(const nlohmann::json& j) {
  Ladder lad;
  for (const auto& r : j.at("rungs")) {
    lad.a.push_back(r.at(0).get<int>());
    lad.b.push_back(r.at(1).get<int>());
  }
  return lad;
}

inline nlohmann::json to_json(const CyclePacking& p) {
  return nlohmann::json{{"cycles", p.cycles}};
}

inline CyclePacking packing_from_json(const nlohmann::json& j) {
  CyclePacking p;
  p.cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
  return p;
}

}  // namespace evencycle
