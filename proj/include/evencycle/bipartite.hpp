#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "aux_assembly.hpp"
#include "graph.hpp"
#include "ladder.hpp"
#include "matching.hpp"
#include "solver.hpp"

namespace evencycle {

/// Density witness for an almost complete bipartite graph. In the balanced
/// form both sides carry cores; in the unbalanced form (|Y| <= |X| <= C|Y|)
/// only Y does, every X vertex meeting the core-grade condition.
struct BipartiteDenseCert {
  Rat tau;
  VertexSet x_side, y_side;
  VertexSet x_core, y_core;
  std::optional<Rat> ratio_bound;  // C, present only for the unbalanced form

  bool balanced() const { return !ratio_bound.has_value(); }

  bool validate(const Graph& g) const {
    if (x_side.intersects(y_side)) return false;
    if (!x_core.is_subset_of(x_side) || !y_core.is_subset_of(y_side))
      return false;
    // degree thresholds round down to whole vertices, as in the
    // tau-complete certificate
    auto floor_frac = [&](long long num, long long m) {
      return num * m / tau.den;
    };
    bool ok = true;
    if (balanced()) {
      int n = x_side.size();
      if (y_side.size() != n) return false;
      x_core.for_each([&](int x) {
        if (g.neighbors(x).intersection_size(y_core) <
            floor_frac(tau.den - tau.num, n))
          ok = false;
      });
      y_core.for_each([&](int y) {
        if (g.neighbors(y).intersection_size(x_core) <
            floor_frac(tau.den - tau.num, n))
          ok = false;
      });
      (x_side - x_core).for_each([&](int x) {
        if (g.neighbors(x).intersection_size(y_core) <
            floor_frac(4 * tau.num, n))
          ok = false;
      });
      (y_side - y_core).for_each([&](int y) {
        if (g.neighbors(y).intersection_size(x_core) <
            floor_frac(4 * tau.num, n))
          ok = false;
      });
      return ok;
    }
    // unbalanced: |Y| <= |X| <= C|Y|, tau*C <= 1/300, X entirely core-grade
    int nx = x_side.size(), ny = y_side.size();
    if (ny > nx) return false;
    if (!(x_core == x_side)) return false;
    const Rat& c = *ratio_bound;
    if (nx * c.den > c.num * ny) return false;
    if (300 * tau.num * c.num > tau.den * c.den) return false;
    int ycn = y_core.size();
    y_core.for_each([&](int y) {
      if (g.neighbors(y).intersection_size(x_side) <
          floor_frac(tau.den - tau.num, nx))
        ok = false;
    });
    x_side.for_each([&](int x) {
      if (g.neighbors(x).intersection_size(y_core) <
          floor_frac(tau.den - tau.num, ycn))
        ok = false;
    });
    (y_side - y_core).for_each([&](int y) {
      if (g.neighbors(y).intersection_size(x_side) <
          floor_frac(4 * tau.num, nx))
        ok = false;
    });
    return ok;
  }
};

/// Computes cores by peeling and returns a validated certificate, or
/// nullopt when the degree conditions cannot be met.
inline std::optional<BipartiteDenseCert> make_bipartite_cert(
    const Graph& g, const VertexSet& x_side, const VertexSet& y_side, Rat tau,
    std::optional<Rat> ratio_bound = std::nullopt) {
  BipartiteDenseCert cert{tau, x_side, y_side, x_side, y_side, ratio_bound};
  if (cert.balanced()) {
    int n = x_side.size();
    long long need = (tau.den - tau.num) * (long long)n / tau.den;
    auto peel_one = [&](VertexSet& mine, const VertexSet& other) {
      int worst = -1, worst_deg = -1;
      mine.for_each([&](int v) {
        int d = g.neighbors(v).intersection_size(other);
        if (d < need && (worst < 0 || d < worst_deg)) {
          worst = v;
          worst_deg = d;
        }
      });
      if (worst < 0) return false;
      mine.erase(worst);
      return true;
    };
    bool changed = true;
    while (changed) {
      changed = peel_one(cert.x_core, cert.y_core);
      changed = peel_one(cert.y_core, cert.x_core) || changed;
    }
  } else {
    int nx = x_side.size();
    long long need = (tau.den - tau.num) * (long long)nx / tau.den;
    // peel Y' on its condition against all of X
    bool changed = true;
    while (changed) {
      changed = false;
      int worst = -1, worst_deg = -1;
      cert.y_core.for_each([&](int y) {
        int d = g.neighbors(y).intersection_size(x_side);
        if (d < need && (worst < 0 || d < worst_deg)) {
          worst = y;
          worst_deg = d;
        }
      });
      if (worst >= 0) {
        cert.y_core.erase(worst);
        changed = true;
      }
    }
  }
  if (!cert.validate(g)) return std::nullopt;
  return cert;
}

struct BipartiteLadder {
  Ladder ladder;
  std::vector<int> pin_positions;  // f: 1-based rung index per pinned edge
};

namespace detail {

// Pick (x, y), x in xs, y in ys, x ~ y, avoiding `used`; smallest ids.
inline std::optional<std::pair<int, int>> free_core_rung(
    const Graph& g, const VertexSet& xs, const VertexSet& ys,
    const VertexSet& used) {
  for (int x = xs.first(); x >= 0; x = xs.next(x)) {
    if (used.contains(x)) continue;
    for (int y = ys.first(); y >= 0; y = ys.next(y)) {
      if (used.contains(y) || !g.adjacent(x, y)) continue;
      return std::pair{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Spanning ladder of the smaller side with up to four prescribed edges in
/// the leading rungs: f(1) = 1 and consecutive pins at most three rungs
/// apart (two when the earlier pin lies fully inside the cores). Pins are
/// chained through one or two fresh core rungs, minor vertices are wrapped
/// into 3-rung blocks around a saturating matching, and the blocks plus a
/// core matching are threaded along an auxiliary Hamilton cycle.
inline std::optional<BipartiteLadder> build_ladder_bipartite(
    const Graph& g, const BipartiteDenseCert& cert,
    const std::vector<std::pair<int, int>>& pins = {}) {
  if (!cert.validate(g))
    throw std::invalid_argument("invalid bipartite density certificate");
  if (pins.size() > 4)
    throw std::invalid_argument("at most four pinned edges");

  // normalize pins to (x-side, y-side) and check the core condition
  std::vector<std::pair<int, int>> pe;
  for (auto [u, v] : pins) {
    if (cert.x_side.contains(u) && cert.y_side.contains(v))
      pe.push_back({u, v});
    else if (cert.y_side.contains(u) && cert.x_side.contains(v))
      pe.push_back({v, u});
    else
      throw std::invalid_argument("pinned edge does not cross the sides");
    if (!g.adjacent(pe.back().first, pe.back().second))
      throw std::invalid_argument("pinned edge missing from the graph");
    if (!cert.x_core.contains(pe.back().first) &&
        !cert.y_core.contains(pe.back().second))
      throw std::invalid_argument("pinned edge must touch a core vertex");
  }

  VertexSet used(g.size());
  auto mark = [&](std::pair<int, int> r) {
    used.insert(r.first);
    used.insert(r.second);
  };

  // ---- prefix through the pins -------------------------------------------
  std::vector<std::pair<int, int>> prefix;
  std::vector<int> fpos;
  for (size_t i = 0; i < pe.size(); ++i) {
    if (i == 0) {
      prefix.push_back(pe[0]);
      mark(pe[0]);
      fpos.push_back(1);
      continue;
    }
    if (used.contains(pe[i].first) || used.contains(pe[i].second))
      return std::nullopt;  // pins sharing vertices cannot be chained
    auto prev = prefix.back();
    if (detail::rung_compat(g, prev, pe[i])) {
      prefix.push_back(pe[i]);
      mark(pe[i]);
      fpos.push_back(int(prefix.size()));
      continue;
    }
    bool prev_core = cert.x_core.contains(prev.first) &&
                     cert.y_core.contains(prev.second);
    int needed = prev_core ? 1 : 2;
    bool done = false;
    for (int hops = 1; hops <= needed && !done; ++hops) {
      // try chaining with `hops` intermediate core rungs
      std::vector<std::pair<int, int>> mids;
      VertexSet avoid = used;
      avoid.insert(pe[i].first);
      avoid.insert(pe[i].second);
      auto cur = prev;
      bool ok = true;
      for (int t = 0; t < hops && ok; ++t) {
        VertexSet xs = cert.x_core & g.neighbors(cur.second);
        VertexSet ys = cert.y_core & g.neighbors(cur.first);
        if (t == hops - 1) {
          xs &= g.neighbors(pe[i].second);
          ys &= g.neighbors(pe[i].first);
        }
        auto mid = detail::free_core_rung(g, xs, ys, avoid);
        if (!mid) {
          ok = false;
          break;
        }
        mids.push_back(*mid);
        avoid.insert(mid->first);
        avoid.insert(mid->second);
        cur = *mid;
      }
      if (ok && detail::rung_compat(g, cur, pe[i])) {
        for (auto& mdr : mids) {
          prefix.push_back(mdr);
          mark(mdr);
        }
        prefix.push_back(pe[i]);
        mark(pe[i]);
        fpos.push_back(int(prefix.size()));
        done = true;
      }
    }
    if (!done) return std::nullopt;
  }

  // ---- wrap minor vertices -----------------------------------------------
  VertexSet xs_left = cert.x_side - used;
  VertexSet ys_left = cert.y_side - used;

  std::vector<detail::FixedNode> nodes;
  auto wrap_minors = [&](const VertexSet& minors, bool minor_on_x) -> bool {
    VertexSet todo = minor_on_x ? (minors & xs_left) : (minors & ys_left);
    if (todo.empty()) return true;
    auto partners_pool = minor_on_x ? (cert.y_core & ys_left)
                                    : ((cert.balanced() ? cert.x_core
                                                        : cert.x_side) &
                                       xs_left);
    auto m = detail::saturating_matching(g, todo.to_vector(),
                                         partners_pool.to_vector());
    if (!m) return false;
    for (auto [mn, mj] : *m) {
      int x_mid = minor_on_x ? mn : mj;
      int y_mid = minor_on_x ? mj : mn;
      used.insert(x_mid);
      used.insert(y_mid);
      xs_left.erase(x_mid);
      ys_left.erase(y_mid);
      // two flanking core rungs adjacent across the middle rung
      VertexSet xc = (cert.balanced() ? cert.x_core : cert.x_side) & xs_left;
      xc &= g.neighbors(y_mid);
      VertexSet yc = (cert.y_core & ys_left);
      yc &= g.neighbors(x_mid);
      auto r1 = detail::free_core_rung(g, xc, yc, used);
      if (!r1) return false;
      used.insert(r1->first);
      used.insert(r1->second);
      auto r2 = detail::free_core_rung(g, xc, yc, used);
      if (!r2) return false;
      used.insert(r2->first);
      used.insert(r2->second);
      xs_left.erase(r1->first);
      ys_left.erase(r1->second);
      xs_left.erase(r2->first);
      ys_left.erase(r2->second);
      nodes.push_back(
          {{*r1, {x_mid, y_mid}, *r2}, false});
    }
    return true;
  };

  if (!wrap_minors(cert.y_side - cert.y_core, false)) return std::nullopt;
  if (cert.balanced() &&
      !wrap_minors(cert.x_side - cert.x_core, true))
    return std::nullopt;

  // ---- core remainder matching -------------------------------------------
  std::vector<int> xr = xs_left.to_vector();
  std::vector<int> yr = ys_left.to_vector();
  if (cert.balanced() && xr.size() != yr.size()) return std::nullopt;
  if (!cert.balanced()) {
    if (xr.size() < yr.size()) return std::nullopt;
    // use only as many x vertices as y vertices remain (smallest ids)
  }
  auto m2 = detail::saturating_matching(g, yr, xr);
  if (!m2) return std::nullopt;
  for (auto [y, x] : *m2) nodes.push_back({{{x, y}}, false});

  // ---- assemble ------------------------------------------------------------
  std::optional<std::pair<int, int>> attach;
  if (!prefix.empty()) attach = prefix.back();
  auto rungs = detail::assemble_fixed_nodes(g, nodes, attach);
  if (!rungs) return std::nullopt;

  BipartiteLadder out;
  for (auto& r : prefix) {
    out.ladder.a.push_back(r.first);
    out.ladder.b.push_back(r.second);
  }
  for (auto& r : *rungs) {
    out.ladder.a.push_back(r.first);
    out.ladder.b.push_back(r.second);
  }
  out.pin_positions = fpos;
  if (out.ladder.rungs() != std::min(cert.x_side.size(), cert.y_side.size()))
    return std::nullopt;
  if (!out.ladder.validate(g)) return std::nullopt;
  return out;
}

}  // namespace evencycle
