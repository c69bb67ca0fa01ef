#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "hamilton.hpp"
#include "ladder.hpp"
#include "matching.hpp"
#include "solver.hpp"

namespace evencycle {

namespace detail {

/// floor(num/den * m): fractional degree thresholds round down to whole
/// vertices, so desk-scale complete graphs certify (the asymptotic
/// hypotheses would otherwise exclude every host below ~1/tau vertices).
inline long long frac_floor(long long num, long long den, long long m) {
  return num * m / den;
}

}  // namespace detail

/// Witness that a vertex set is tau-complete: a major set whose members see
/// a (1-tau) fraction of it, plus a minor set whose members each see at
/// least a 4*tau fraction of the major set.
struct TauCompleteCert {
  Rat tau;
  VertexSet major;
  VertexSet minor;

  VertexSet all() const { return major | minor; }

  bool validate(const Graph& g) const {
    if (major.intersects(minor)) return false;
    int m = major.size();
    int total = m + minor.size();
    if (m < detail::frac_floor(tau.den - tau.num, tau.den, total))
      return false;
    bool ok = true;
    major.for_each([&](int v) {
      if (g.neighbors(v).intersection_size(major) <
          detail::frac_floor(tau.den - tau.num, tau.den, m))
        ok = false;
    });
    minor.for_each([&](int w) {
      if (g.neighbors(w).intersection_size(major) <
          detail::frac_floor(4 * tau.num, tau.den, m))
        ok = false;
    });
    return ok;
  }
};

/// Fixed point of the major-set condition within `pool`: vertices whose
/// inside-degree drops below the (1-tau) fraction are peeled one at a time
/// (lowest inside-degree first, ties by id). Returns nullopt as soon as the
/// survivor set falls below (1-tau)|pool| or some leftover vertex misses
/// the 4*tau minor-degree condition.
inline std::optional<TauCompleteCert> check_tau_complete_within(
    const Graph& g, const VertexSet& pool, Rat tau) {
  if (tau.num <= 0 || 10 * tau.num >= tau.den)
    throw std::invalid_argument("tau must lie in (0, 1/10)");
  int total = pool.size();
  VertexSet major = pool;
  while (true) {
    int m = major.size();
    if (m < detail::frac_floor(tau.den - tau.num, tau.den, total))
      return std::nullopt;
    int worst = -1, worst_deg = -1;
    major.for_each([&](int v) {
      int d = g.neighbors(v).intersection_size(major);
      if (d < detail::frac_floor(tau.den - tau.num, tau.den, m) &&
          (worst < 0 || d < worst_deg)) {
        worst = v;
        worst_deg = d;
      }
    });
    if (worst < 0) break;
    major.erase(worst);
  }
  TauCompleteCert cert{tau, major, pool - major};
  if (!cert.validate(g)) return std::nullopt;
  return cert;
}

inline std::optional<TauCompleteCert> check_tau_complete(const Graph& g,
                                                         Rat tau) {
  return check_tau_complete_within(g, VertexSet::full(g.size()), tau);
}

namespace detail {

// Do the two rungs admit both cross edges in some pairing? With {a,b}
// oriented, an unoriented {p,q} can follow as (p,q) needing a~q, b~p, or
// as (q,p) needing a~p, b~q.
inline bool rungs_linkable(const Graph& g, std::pair<int, int> e1,
                           std::pair<int, int> e2) {
  auto [a, b] = e1;
  auto [p, q] = e2;
  return (g.adjacent(a, q) && g.adjacent(b, p)) ||
         (g.adjacent(a, p) && g.adjacent(b, q));
}

// Orient {p,q} to follow the oriented rung (a,b); nullopt when impossible.
inline std::optional<std::pair<int, int>> orient_after(
    const Graph& g, std::pair<int, int> prev, std::pair<int, int> next) {
  auto [a, b] = prev;
  auto [p, q] = next;
  if (g.adjacent(a, q) && g.adjacent(b, p)) return std::pair{p, q};
  if (g.adjacent(a, p) && g.adjacent(b, q)) return std::pair{q, p};
  return std::nullopt;
}

// Core assembly for tau-complete hosts: a ladder spanning (up to parity)
// pool \ removed, with a prescribed oriented first rung and optionally a
// prescribed last rung. Matched minor-major edges plus a near-perfect
// matching of the remaining major set become the nodes of an auxiliary
// graph whose Hamilton cycle is unrolled into the rung sequence.
struct TauAssembly {
  Ladder ladder;
  int leftover = -1;  // major vertex not covered when the pool count is odd
};

inline std::optional<TauAssembly> tau_spanning_ladder(
    const Graph& g, const TauCompleteCert& cert, const VertexSet& removed,
    std::pair<int, int> first_rung,
    std::optional<std::pair<int, int>> last_rung = std::nullopt) {
  VertexSet pool = cert.all();
  pool -= removed;
  for (int v : {first_rung.first, first_rung.second}) {
    if (!pool.contains(v)) return std::nullopt;
    pool.erase(v);
  }
  if (!g.adjacent(first_rung.first, first_rung.second)) return std::nullopt;
  if (last_rung) {
    for (int v : {last_rung->first, last_rung->second}) {
      if (!pool.contains(v)) return std::nullopt;
      pool.erase(v);
    }
    if (!g.adjacent(last_rung->first, last_rung->second)) return std::nullopt;
  }

  VertexSet minor_pool = cert.minor & pool;
  VertexSet major_pool = cert.major & pool;

  // Saturate the minor set into distinct major partners.
  auto m1 = saturating_matching(g, minor_pool.to_vector(),
                                major_pool.to_vector());
  if (!m1) return std::nullopt;

  VertexSet rest = major_pool;
  for (auto [mn, mj] : *m1) rest.erase(mj);

  // Near-perfect matching of the remaining major set off a Hamilton cycle.
  std::vector<std::pair<int, int>> m2;
  int leftover = -1;
  auto rest_list = rest.to_vector();
  if (rest_list.size() == 1) {
    leftover = rest_list[0];
  } else if (rest_list.size() == 2) {
    if (!g.adjacent(rest_list[0], rest_list[1])) return std::nullopt;
    m2.push_back({rest_list[0], rest_list[1]});
  } else if (rest_list.size() >= 3) {
    auto sub = induced_subgraph(g, rest);
    auto cyc = find_hamilton_cycle(sub.graph);
    if (!cyc) return std::nullopt;
    for (size_t i = 0; i + 1 < cyc->size(); i += 2)
      m2.push_back({sub.to_host[(*cyc)[i]], sub.to_host[(*cyc)[i + 1]]});
    if (cyc->size() % 2 == 1) leftover = sub.to_host[cyc->back()];
  }

  // Auxiliary graph: one node per matched edge; minor-carrying nodes may
  // not sit next to each other.
  struct Node {
    std::pair<int, int> e;
    bool minor;
  };
  std::vector<Node> nodes;
  for (auto [mn, mj] : *m1) nodes.push_back({{mn, mj}, true});
  for (auto& e : m2) nodes.push_back({e, false});
  int h = int(nodes.size());

  auto node_link = [&](int i, int j) {
    if (nodes[i].minor && nodes[j].minor) return false;
    return rungs_linkable(g, nodes[i].e, nodes[j].e);
  };

  // Order the nodes along a Hamilton cycle of the auxiliary graph.
  std::vector<int> cycle_order;
  if (h == 0) {
    // nothing between the prescribed rungs
  } else if (h == 1) {
    cycle_order = {0};
  } else if (h == 2) {
    if (!node_link(0, 1)) return std::nullopt;
    cycle_order = {0, 1};
  } else {
    std::vector<std::pair<int, int>> hedges;
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j)
        if (node_link(i, j)) hedges.emplace_back(i, j);
    Graph haux(h, hedges);
    auto hcyc = find_hamilton_cycle(haux);
    if (!hcyc) return std::nullopt;
    cycle_order = *hcyc;
  }

  // Splice: walk the cycle starting after a node compatible with the first
  // rung, ending (for a prescribed last rung) at a compatible node.
  auto assemble = [&](const std::vector<int>& seq)
      -> std::optional<Ladder> {
    std::vector<std::pair<int, int>> rungs{first_rung};
    for (int idx : seq) {
      auto oriented = orient_after(g, rungs.back(), nodes[idx].e);
      if (!oriented) return std::nullopt;
      rungs.push_back(*oriented);
    }
    if (last_rung) {
      auto oriented = orient_after(g, rungs.back(), *last_rung);
      if (!oriented) return std::nullopt;
      rungs.push_back(*oriented);
    }
    Ladder lad;
    for (auto [a, b] : rungs) {
      lad.a.push_back(a);
      lad.b.push_back(b);
    }
    if (!lad.validate(g)) return std::nullopt;
    return lad;
  };

  if (cycle_order.empty()) {
    std::vector<int> empty;
    auto lad = assemble(empty);
    if (!lad) return std::nullopt;
    return TauAssembly{*lad, leftover};
  }

  int m = int(cycle_order.size());
  for (int start = 0; start < m; ++start) {
    for (int dir : {1, -1}) {
      std::vector<int> seq;
      for (int j = 0; j < m; ++j)
        seq.push_back(cycle_order[((start + dir * j) % m + m) % m]);
      if (!rungs_linkable(g, first_rung, nodes[seq.front()].e)) continue;
      if (last_rung &&
          !rungs_linkable(g, nodes[seq.back()].e, *last_rung))
        continue;
      auto lad = assemble(seq);
      if (lad) return TauAssembly{*lad, leftover};
    }
  }
  return std::nullopt;
}

// Smallest-id pair (x, y) with x in cand_a, y in cand_b, x != y, x ~ y.
inline std::optional<std::pair<int, int>> adjacent_pair(
    const Graph& g, const VertexSet& cand_a, const VertexSet& cand_b) {
  for (int x = cand_a.first(); x >= 0; x = cand_a.next(x))
    for (int y = cand_b.first(); y >= 0; y = cand_b.next(y))
      if (x != y && g.adjacent(x, y)) return std::pair{x, y};
  return std::nullopt;
}

}  // namespace detail

/// Result of a tau-complete ladder build; `parity_vertex` is set for the
/// variants that reserve one, `ham_path` for the path variant.
struct TauBuild {
  Ladder ladder;
  int parity_vertex = -1;
  Path ham_path;
};

/// Ladder constructions inside a tau-complete vertex set, one variant per
/// part of the almost-complete lemma:
///   1: anchors u1,v1,u2,v2 -> ladder of floor((n-5)/2) rungs avoiding the
///      anchors and a parity vertex z, first rung in N(u1) x N(v1), last
///      rung in N(u2) x N(v2), z adjacent to u1 and the first-rung a-end.
///   2: anchors u1,v1,x,y (x ~ y, x in N(u1), y in N(v1)) -> ladder of
///      floor((n-2)/2) rungs avoiding u1,v1 with first rung {x,y}.
///   3: as 2 but also avoiding a parity vertex z in N(u1) cap N(x):
///      floor((n-3)/2) rungs.
///   4: anchors u1,v1,x (x in N(u1) cap N(v1)) -> floor((n-1)/2) rungs
///      avoiding u1 with first rung {x,v1}.
///   5: anchors u1,v1 -> Hamilton path of the whole set from u1 to v1.
/// The quantitative hypotheses of the lemma are not enforced; when a step
/// cannot be completed the build reports nullopt (inconclusive) instead.
inline std::optional<TauBuild> build_ladder_tau(const Graph& g,
                                                const TauCompleteCert& cert,
                                                int variant,
                                                const std::vector<int>& anchors) {
  if (!cert.validate(g))
    throw std::invalid_argument("invalid tau-complete certificate");
  VertexSet pool = cert.all();
  for (int a : anchors)
    if (!pool.contains(a))
      throw std::invalid_argument("anchor outside the certified set");
  for (size_t i = 0; i < anchors.size(); ++i)
    for (size_t j = i + 1; j < anchors.size(); ++j)
      if (anchors[i] == anchors[j])
        throw std::invalid_argument("anchors must be distinct");

  int n = pool.size();
  auto removed_set = [&](std::initializer_list<int> vs) {
    VertexSet r(g.size());
    for (int v : vs) r.insert(v);
    return r;
  };

  switch (variant) {
    case 1: {
      if (anchors.size() != 4) throw std::invalid_argument("need 4 anchors");
      int u1 = anchors[0], v1 = anchors[1], u2 = anchors[2], v2 = anchors[3];
      VertexSet avoid = removed_set({u1, v1, u2, v2});
      VertexSet cand1 = g.neighbors(u1) & cert.major;
      cand1 -= avoid;
      VertexSet cand2 = g.neighbors(v1) & cert.major;
      cand2 -= avoid;
      auto e1 = detail::adjacent_pair(g, cand1, cand2);
      if (!e1) return std::nullopt;
      auto [x1, y1] = *e1;
      // parity vertex: smallest eligible in N(u1) cap N(x1)
      VertexSet zc = g.neighbors(u1) & g.neighbors(x1);
      zc &= pool;
      zc -= avoid;
      zc.erase(x1);
      zc.erase(y1);
      int z = zc.first();
      if (z < 0) return std::nullopt;

      VertexSet used = removed_set({u1, v1, u2, v2, z, x1, y1});
      VertexSet cand3 = g.neighbors(u2) & cert.major;
      cand3 -= used;
      VertexSet cand4 = g.neighbors(v2) & cert.major;
      cand4 -= used;
      // scan e2 candidates; the assembly fixes the final orientation, so
      // retry until the last rung lands as (a,b) in N(u2) x N(v2)
      for (int x2 = cand3.first(); x2 >= 0; x2 = cand3.next(x2)) {
        for (int y2 = cand4.first(); y2 >= 0; y2 = cand4.next(y2)) {
          if (x2 == y2 || !g.adjacent(x2, y2)) continue;
          auto asmb = detail::tau_spanning_ladder(
              g, cert, removed_set({u1, v1, u2, v2, z}), {x1, y1},
              std::pair{x2, y2});
          if (!asmb) continue;
          auto [la, lb] = asmb->ladder.last_rung();
          if (!g.neighbors(u2).contains(la) || !g.neighbors(v2).contains(lb))
            continue;
          if (asmb->ladder.rungs() != (n - 5) / 2) continue;
          return TauBuild{asmb->ladder, z, {}};
        }
      }
      return std::nullopt;
    }
    case 2:
    case 3: {
      if (anchors.size() != 4) throw std::invalid_argument("need 4 anchors");
      int u1 = anchors[0], v1 = anchors[1], x = anchors[2], y = anchors[3];
      if (!g.adjacent(u1, x) || !g.adjacent(v1, y) || !g.adjacent(x, y))
        throw std::invalid_argument("first-rung anchors not adjacent as required");
      int z = -1;
      VertexSet removed = removed_set({u1, v1});
      if (variant == 3) {
        VertexSet zc = g.neighbors(u1) & g.neighbors(x);
        zc &= pool;
        zc.erase(u1);
        zc.erase(v1);
        zc.erase(x);
        zc.erase(y);
        z = zc.first();
        if (z < 0) return std::nullopt;
        removed.insert(z);
      }
      auto asmb = detail::tau_spanning_ladder(g, cert, removed, {x, y});
      if (!asmb) return std::nullopt;
      int want = variant == 2 ? (n - 2) / 2 : (n - 3) / 2;
      if (asmb->ladder.rungs() != want) return std::nullopt;
      return TauBuild{asmb->ladder, z, {}};
    }
    case 4: {
      if (anchors.size() != 3) throw std::invalid_argument("need 3 anchors");
      int u1 = anchors[0], v1 = anchors[1], x = anchors[2];
      if (!g.adjacent(u1, x) || !g.adjacent(v1, x))
        throw std::invalid_argument("x must be a common neighbor of u1, v1");
      auto asmb = detail::tau_spanning_ladder(g, cert, removed_set({u1}),
                                              {x, v1});
      if (!asmb) return std::nullopt;
      if (asmb->ladder.rungs() != (n - 1) / 2) return std::nullopt;
      return TauBuild{asmb->ladder, -1, {}};
    }
    case 5: {
      if (anchors.size() != 2) throw std::invalid_argument("need 2 anchors");
      int u1 = anchors[0], v1 = anchors[1];
      VertexSet cand1 = g.neighbors(u1) & cert.major;
      cand1.erase(u1);
      cand1.erase(v1);
      VertexSet cand2 = g.neighbors(v1) & cert.major;
      cand2.erase(u1);
      cand2.erase(v1);
      for (int x = cand1.first(); x >= 0; x = cand1.next(x)) {
        for (int y = cand2.first(); y >= 0; y = cand2.next(y)) {
          if (x == y || !g.adjacent(x, y)) continue;
          auto asmb = detail::tau_spanning_ladder(
              g, cert, removed_set({u1, v1}), {x, y});
          if (!asmb) continue;
          // snake path runs a1 -> b1, i.e. x .. y
          auto snake = ladder_block_path(asmb->ladder, 0,
                                         asmb->ladder.rungs());
          if (asmb->leftover >= 0) {
            // insert the uncovered vertex between adjacent snake neighbors
            int w = asmb->leftover;
            bool placed = false;
            for (size_t i = 0; i + 1 < snake.size() && !placed; ++i) {
              if (g.adjacent(w, snake[i]) && g.adjacent(w, snake[i + 1])) {
                snake.insert(snake.begin() + i + 1, w);
                placed = true;
              }
            }
            if (!placed) continue;
          }
          Path p;
          p.vertices.push_back(u1);
          p.vertices.insert(p.vertices.end(), snake.begin(), snake.end());
          p.vertices.push_back(v1);
          if (!p.valid_in(g) || p.length() != n) continue;
          return TauBuild{{}, -1, p};
        }
      }
      return std::nullopt;
    }
    default:
      throw std::invalid_argument("variant must be 1..5");
  }
}

/// Spanning ladder of the certified set with a prescribed first rung and no
/// removed anchors: floor(n/2) rungs.
inline std::optional<Ladder> build_ladder_first_rung(const Graph& g,
                                                     const TauCompleteCert& cert,
                                                     int x, int y) {
  if (!cert.validate(g))
    throw std::invalid_argument("invalid tau-complete certificate");
  VertexSet none(g.size());
  auto asmb = detail::tau_spanning_ladder(g, cert, none, {x, y});
  if (!asmb) return std::nullopt;
  if (asmb->ladder.rungs() != cert.all().size() / 2) return std::nullopt;
  return asmb->ladder;
}

/// Joins two tau-complete components across a matching {u1,u2}, {v1,v2}
/// (u_i, v_i in x_i) into a weak ladder: (n',2) in general with
/// n' = floor(|X1|/2) + floor(|X2|/2) - 2, improving to (n'+1, 1) when
/// u1 ~ v1 or u2 ~ v2.
inline std::optional<WeakLadder> attach_components(
    const Graph& g, const VertexSet& x1, const VertexSet& x2, Rat tau,
    int u1, int u2, int v1, int v2) {
  if (x1.intersects(x2))
    throw std::invalid_argument("components must be disjoint");
  if (!x1.contains(u1) || !x1.contains(v1) || !x2.contains(u2) ||
      !x2.contains(v2) || u1 == v1 || u2 == v2)
    throw std::invalid_argument("matching endpoints misplaced");
  if (!g.adjacent(u1, u2) || !g.adjacent(v1, v2))
    throw std::invalid_argument("matching edges missing");
  auto c1 = check_tau_complete_within(g, x1, tau);
  auto c2 = check_tau_complete_within(g, x2, tau);
  if (!c1 || !c2)
    throw std::invalid_argument("components are not tau-complete");

  VertexSet none(g.size());
  auto rung_near = [&](const TauCompleteCert& cert, int u, int v)
      -> std::optional<std::pair<int, int>> {
    VertexSet ca = g.neighbors(u) & cert.major;
    ca.erase(u);
    ca.erase(v);
    VertexSet cb = g.neighbors(v) & cert.major;
    cb.erase(u);
    cb.erase(v);
    return detail::adjacent_pair(g, ca, cb);
  };

  bool direct1 = g.adjacent(u1, v1);
  bool direct2 = g.adjacent(u2, v2);
  if (direct1 || direct2) {
    // one side keeps its matched pair as the first rung: k = 1
    const TauCompleteCert& cd = direct1 ? *c1 : *c2;
    const TauCompleteCert& co = direct1 ? *c2 : *c1;
    int du = direct1 ? u1 : u2, dv = direct1 ? v1 : v2;
    int ou = direct1 ? u2 : u1, ov = direct1 ? v2 : v1;
    auto la = detail::tau_spanning_ladder(g, cd, none, {du, dv});
    if (!la) return std::nullopt;
    auto rung = rung_near(co, ou, ov);
    if (!rung) return std::nullopt;
    VertexSet rm(g.size());
    rm.insert(ou);
    rm.insert(ov);
    auto lb = detail::tau_spanning_ladder(g, co, rm, *rung);
    if (!lb) return std::nullopt;
    Path pa{{du, ou, rung->first}};
    Path pb{{dv, ov, rung->second}};
    WeakLadder w(la->ladder, lb->ladder, pa, pb);
    w.require_valid(g);
    return w;
  }

  auto r1 = rung_near(*c1, u1, v1);
  auto r2 = rung_near(*c2, u2, v2);
  if (!r1 || !r2) return std::nullopt;
  VertexSet rm1(g.size()), rm2(g.size());
  rm1.insert(u1);
  rm1.insert(v1);
  rm2.insert(u2);
  rm2.insert(v2);
  auto la = detail::tau_spanning_ladder(g, *c1, rm1, *r1);
  auto lb = detail::tau_spanning_ladder(g, *c2, rm2, *r2);
  if (!la || !lb) return std::nullopt;
  Path pa{{r1->first, u1, u2, r2->first}};
  Path pb{{r1->second, v1, v2, r2->second}};
  WeakLadder w(la->ladder, lb->ladder, pa, pb);
  w.require_valid(g);
  return w;
}

}  // namespace evencycle
