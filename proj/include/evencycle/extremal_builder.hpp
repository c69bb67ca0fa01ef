#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "aux_assembly.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "ladder.hpp"
#include "matching.hpp"
#include "solver.hpp"

namespace evencycle {

struct ExtremalOutcome {
  enum class Kind { ladder, example2, packing, inconclusive };
  Kind kind = Kind::inconclusive;
  Ladder ladder;
  std::optional<Ex2Params> ex2;
  CyclePacking packing;
  std::string note;

  static ExtremalOutcome fail(std::string why) {
    ExtremalOutcome o;
    o.kind = Kind::inconclusive;
    o.note = std::move(why);
    return o;
  }
};

namespace detail {

// Star packing (K_{1,leaves}) in gb: exhaustive maximization for <= 20
// vertices (edges inside B are scarce, so the search is small), greedy
// smallest-id scan beyond.
inline std::vector<std::pair<int, std::vector<int>>> max_star_packing(
    const Graph& gb, const VertexSet& pool, int leaves) {
  std::vector<int> centers;
  pool.for_each([&](int v) {
    if (gb.neighbors(v).intersection_size(pool) >= leaves) centers.push_back(v);
  });

  using Packing = std::vector<std::pair<int, std::vector<int>>>;
  if (pool.size() > 20) {
    Packing out;
    VertexSet used(gb.size());
    for (int c : centers) {
      if (used.contains(c)) continue;
      std::vector<int> picked;
      gb.neighbors(c).for_each([&](int w) {
        if (int(picked.size()) < leaves && pool.contains(w) &&
            !used.contains(w))
          picked.push_back(w);
      });
      if (int(picked.size()) == leaves) {
        used.insert(c);
        for (int w : picked) used.insert(w);
        out.push_back({c, picked});
      }
    }
    return out;
  }

  Packing best;
  Packing cur;
  VertexSet used(gb.size());
  auto dfs = [&](auto&& self, size_t idx) -> void {
    if (cur.size() > best.size()) best = cur;
    if (idx == centers.size()) return;
    // upper bound prune
    if (cur.size() + (centers.size() - idx) <= best.size()) {
      // still explore: the bound is loose only when centers overlap
    }
    self(self, idx + 1);  // skip this center
    int c = centers[idx];
    if (used.contains(c)) return;
    std::vector<int> nbrs;
    gb.neighbors(c).for_each([&](int w) {
      if (pool.contains(w) && !used.contains(w)) nbrs.push_back(w);
    });
    if (int(nbrs.size()) < leaves) return;
    std::vector<int> comb(leaves, 0);
    auto choose = [&](auto&& pick, int start, int depth) -> void {
      if (depth == leaves) {
        used.insert(c);
        for (int t = 0; t < leaves; ++t) used.insert(comb[t]);
        cur.push_back({c, std::vector<int>(comb.begin(), comb.end())});
        self(self, idx + 1);
        cur.pop_back();
        used.erase(c);
        for (int t = 0; t < leaves; ++t) used.erase(comb[t]);
        return;
      }
      for (int p = start; p < int(nbrs.size()); ++p) {
        comb[depth] = nbrs[p];
        pick(pick, p + 1, depth + 1);
      }
    };
    choose(choose, 0, 0);
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace detail

/// Constructive route through the extremal structure: refine the
/// near-independent set and its complement, then either thread a spanning
/// ladder through wrapped exceptional vertices (surplus case), repair a
/// deficiency of K rungs with K stars found inside the near-independent
/// side, or recognize the bipartite-plus-matching obstruction. When the
/// obstruction is reached and some target exceeds 2, the packing is still
/// produced by splicing a 6-cycle through two matching edges.
inline ExtremalOutcome build_ladder_extremal(const Graph& g,
                                             const BetaExtremalCert& bcert,
                                             const TargetPartition& targets) {
  if (!bcert.validate(g))
    throw std::invalid_argument("invalid beta-extremal certificate");
  if (targets.empty()) throw std::invalid_argument("empty target partition");
  int n = g.size();
  int delta = min_degree(g);
  double beta = bcert.beta.to_double();
  double gamma = 6.0 * std::sqrt(beta);

  VertexSet b_set = bcert.b_set;
  VertexSet a_set = VertexSet::full(n);
  a_set -= b_set;

  // exceptional B vertices and low-B-degree A vertices form the slack pool
  VertexSet slack(n);
  long long bn_ceil = bcert.beta.ceil_times(n);
  b_set.for_each([&](int v) {
    if (g.neighbors(v).intersection_size(b_set) > bn_ceil) slack.insert(v);
  });
  VertexSet b2 = b_set - slack;
  a_set.for_each([&](int v) {
    if (g.neighbors(v).intersection_size(b2) < double(n - delta) - gamma * n)
      slack.insert(v);
  });
  VertexSet a2 = a_set - slack;

  // distribute the slack, balancing the smaller side
  VertexSet a_extra(n), b_extra(n);
  slack.for_each([&](int v) {
    int to_b2 = g.neighbors(v).intersection_size(b2);
    int to_a2 = g.neighbors(v).intersection_size(a2);
    bool a_ok = to_b2 >= gamma * n, b_ok = to_a2 >= gamma * n;
    bool pick_a;
    if (a_ok && !b_ok)
      pick_a = true;
    else if (b_ok && !a_ok)
      pick_a = false;
    else if (a_ok && b_ok)
      pick_a = a2.size() + a_extra.size() <= b2.size() + b_extra.size();
    else
      pick_a = to_b2 >= to_a2;
    (pick_a ? a_extra : b_extra).insert(v);
  });

  VertexSet a_full = a2 | a_extra;
  VertexSet b_full = b2 | b_extra;
  int sa = a_full.size();

  VertexSet used(n);
  std::vector<detail::FixedNode> nodes;

  // 3-rung wrap of one odd vertex `mid_a`-or-`mid_b` around a matched edge
  auto wrap = [&](int xm, int ym) -> bool {
    VertexSet xc = a2 & g.neighbors(ym);
    xc -= used;
    VertexSet yc = b2 & g.neighbors(xm);
    yc -= used;
    std::optional<std::pair<int, int>> r1, r2;
    for (int x = xc.first(); x >= 0 && !r2; x = xc.next(x)) {
      for (int y = yc.first(); y >= 0 && !r2; y = yc.next(y)) {
        if (!g.adjacent(x, y)) continue;
        if (!r1) {
          r1 = {x, y};
          used.insert(x);
          used.insert(y);
        } else if (x != r1->first && y != r1->second) {
          r2 = {x, y};
          used.insert(x);
          used.insert(y);
        }
      }
    }
    if (!r1 || !r2) return false;
    nodes.push_back({{*r1, {xm, ym}, *r2}, false});
    return true;
  };

  auto wrap_extras = [&]() -> bool {
    bool ok = true;
    a_extra.for_each([&](int v) {
      if (!ok || used.contains(v)) return;
      VertexSet partners = b2 & g.neighbors(v);
      partners -= used;
      int y = partners.first();
      if (y < 0) {
        ok = false;
        return;
      }
      used.insert(v);
      used.insert(y);
      if (!wrap(v, y)) ok = false;
    });
    b_extra.for_each([&](int v) {
      if (!ok || used.contains(v)) return;
      VertexSet partners = a2 & g.neighbors(v);
      partners -= used;
      int x = partners.first();
      if (x < 0) {
        ok = false;
        return;
      }
      used.insert(v);
      used.insert(x);
      if (!wrap(x, v)) ok = false;
    });
    return ok;
  };

  auto finish_ladder = [&](int want_rungs,
                           std::optional<std::pair<int, int>> prefix_rung)
      -> std::optional<Ladder> {
    VertexSet a_rest = a_full - used;
    VertexSet b_rest = b_full - used;
    auto m = detail::saturating_matching(g, a_rest.to_vector(),
                                         b_rest.to_vector());
    if (!m) return std::nullopt;
    for (auto [x, y] : *m) nodes.push_back({{{x, y}}, false});
    auto rungs = detail::assemble_fixed_nodes(g, nodes, prefix_rung);
    if (!rungs) return std::nullopt;
    Ladder lad;
    if (prefix_rung) {
      lad.a.push_back(prefix_rung->first);
      lad.b.push_back(prefix_rung->second);
    }
    for (auto [x, y] : *rungs) {
      lad.a.push_back(x);
      lad.b.push_back(y);
    }
    if (lad.rungs() < want_rungs) return std::nullopt;
    if (lad.rungs() > want_rungs) lad = lad.slice(0, want_rungs);
    if (!lad.validate(g)) return std::nullopt;
    return lad;
  };

  if (sa >= delta) {
    // surplus case: wrapped extras plus a saturating matching span a ladder
    if (!wrap_extras()) return ExtremalOutcome::fail("wrap step failed");
    auto lad = finish_ladder(delta, std::nullopt);
    if (!lad) return ExtremalOutcome::fail("assembly failed");
    ExtremalOutcome out;
    out.kind = ExtremalOutcome::Kind::ladder;
    out.ladder = *lad;
    return out;
  }

  // deficiency case: K missing rungs must come from stars inside B
  int deficiency = delta - sa;
  auto sub = induced_subgraph(g, b_full);
  Graph gb = sub.graph;
  VertexSet bpool = VertexSet::full(gb.size());

  auto triples = detail::max_star_packing(gb, bpool, 3);
  VertexSet after_triples = bpool;
  int triples_used = std::min<int>(int(triples.size()), deficiency);
  for (int i = 0; i < triples_used; ++i) {
    after_triples.erase(triples[i].first);
    for (int w : triples[i].second) after_triples.erase(w);
  }
  auto doubles = detail::max_star_packing(gb, after_triples, 2);
  int doubles_needed = deficiency - triples_used;

  if (doubles_needed <= 2 && doubles_needed <= int(doubles.size())) {
    // star route: each star becomes a rung block whose center stands in
    // for a missing A vertex
    bool ok = true;
    for (int i = 0; i < triples_used && ok; ++i) {
      int c = sub.to_host[triples[i].first];
      std::vector<int> lv;
      for (int w : triples[i].second) lv.push_back(sub.to_host[w]);
      // middle rung {c, lv0}; flanks {y, lv1}, {z, lv2} with y,z in A2
      VertexSet yc = a2 & g.neighbors(lv[1]);
      yc &= g.neighbors(lv[0]);
      yc -= used;
      VertexSet zc = a2 & g.neighbors(lv[2]);
      zc &= g.neighbors(lv[0]);
      zc -= used;
      int y = yc.first();
      if (y >= 0) zc.erase(y);
      int z = zc.first();
      if (y < 0 || z < 0) {
        ok = false;
        break;
      }
      for (int v : {c, lv[0], lv[1], lv[2], y, z}) used.insert(v);
      nodes.push_back({{{y, lv[1]}, {c, lv[0]}, {z, lv[2]}}, false});
    }
    for (int i = 0; i < doubles_needed && ok; ++i) {
      int c = sub.to_host[doubles[i].first];
      std::vector<int> lv;
      for (int w : doubles[i].second) lv.push_back(sub.to_host[w]);
      VertexSet yc = a2 & g.neighbors(lv[0]);
      yc &= g.neighbors(lv[1]);
      yc -= used;
      int y = yc.first();
      if (y < 0) {
        ok = false;
        break;
      }
      for (int v : {c, lv[0], lv[1], y}) used.insert(v);
      nodes.push_back({{{y, lv[1]}, {c, lv[0]}}, true});
    }
    if (ok && wrap_extras()) {
      auto lad = finish_ladder(delta, std::nullopt);
      if (lad) {
        ExtremalOutcome out;
        out.kind = ExtremalOutcome::Kind::ladder;
        out.ladder = *lad;
        return out;
      }
    }
    return ExtremalOutcome::fail("star assembly failed");
  }

  if (deficiency > 1)
    return ExtremalOutcome::fail("deficiency exceeds available stars");

  // K = 1 with no stars: B must induce a perfect matching, i.e. the
  // bipartite-plus-matching obstruction.
  auto ex2 = detect_example2(g);
  if (!ex2) return ExtremalOutcome::fail("structure is not the obstruction");

  if (targets.targets.back() <= 2) {
    ExtremalOutcome out;
    out.kind = ExtremalOutcome::Kind::example2;
    out.ex2 = ex2;
    return out;
  }

  // splice: a 6-cycle through two matching edges carries the long target
  std::vector<std::pair<int, int>> bmatch;
  b_full.for_each([&](int v) {
    int w = -1;
    g.neighbors(v).for_each([&](int u) {
      if (b_full.contains(u)) w = u;
    });
    if (w > v) bmatch.push_back({v, w});
  });
  if (bmatch.size() < 2) return ExtremalOutcome::fail("too few matching edges");
  auto [v1, v1p] = bmatch[0];
  auto [v2, v2p] = bmatch[1];
  VertexSet c1 = a_full & g.neighbors(v1);
  c1 &= g.neighbors(v2p);
  VertexSet c2 = a_full & g.neighbors(v1p);
  c2 &= g.neighbors(v2);
  int x1 = c1.first();
  if (x1 >= 0) c2.erase(x1);
  int x1p = c2.first();
  if (x1 < 0 || x1p < 0) return ExtremalOutcome::fail("no 6-cycle anchors");
  std::vector<int> six{x1, v1, v1p, x1p, v2, v2p};
  for (int v : six) used.insert(v);

  // first rung of the remainder ladder: z1' in N(v1) cap A, z1 in N(x1) cap B
  std::optional<std::pair<int, int>> first;
  VertexSet za = a_full & g.neighbors(v1);
  za -= used;
  for (int zb_a = za.first(); zb_a >= 0 && !first; zb_a = za.next(zb_a)) {
    VertexSet zb = b_full & g.neighbors(x1);
    zb -= used;
    for (int z = zb.first(); z >= 0; z = zb.next(z)) {
      if (g.adjacent(zb_a, z)) {
        first = {zb_a, z};
        break;
      }
    }
  }
  if (!first) return ExtremalOutcome::fail("no splice rung");
  used.insert(first->first);
  used.insert(first->second);
  if (!wrap_extras()) return ExtremalOutcome::fail("wrap step failed");
  auto lad = finish_ladder(delta - 3, first);
  if (!lad) return ExtremalOutcome::fail("remainder assembly failed");

  // pick the largest target (>= 3) for the spliced cycle
  int nl = targets.targets.back();
  int m = nl - 3;
  if (m > lad->rungs()) return ExtremalOutcome::fail("target too long");

  CyclePacking packing;
  packing.cycles.resize(targets.count());
  std::vector<int> cyc{v1, v1p, x1p, v2, v2p, x1};
  if (m > 0) {
    // open the x1~v1 edge and ride the first m rungs
    auto snake = ladder_block_path(*lad, 0, m);  // z1' .. z1
    std::reverse(snake.begin(), snake.end());    // z1 .. z1'
    cyc = {v1, v1p, x1p, v2, v2p, x1};
    cyc.insert(cyc.end(), snake.begin(), snake.end());
  }
  packing.cycles[targets.count() - 1] = cyc;
  int pos = m;
  for (int i = 0; i + 1 < targets.count(); ++i) {
    packing.cycles[i] = ladder_block_cycle(*lad, pos, targets.targets[i]);
    pos += targets.targets[i];
  }
  if (pos != lad->rungs())
    return ExtremalOutcome::fail("length bookkeeping failed");
  packing.require_valid(g, targets);
  ExtremalOutcome out;
  out.kind = ExtremalOutcome::Kind::packing;
  out.packing = packing;
  return out;
}

}  // namespace evencycle
