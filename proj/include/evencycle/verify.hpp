#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumerate.hpp"
#include "extract.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "hamilton.hpp"
#include "io.hpp"
#include "pipeline.hpp"
#include "solver.hpp"

namespace evencycle {

/// Seeded deterministic RNG for sweeps. Bounded draws are hand-rolled so
/// reports are bit-reproducible (std::mt19937_64 output is pinned by the
/// standard; distribution classes are not).
class SweepRng {
 public:
  explicit SweepRng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  /// Uniform integer in [0, bound).
  int below(int bound) { return int(eng_() % uint64_t(bound)); }

  /// Uniform integer in [lo, hi].
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  /// Bernoulli with probability num/den.
  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

inline Graph random_graph(SweepRng& rng, int n, int p_num, int p_den) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p_num, p_den)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Random graph patched up to min degree >= floor_deg by adding edges from
/// deficient vertices to random non-neighbors.
inline Graph random_graph_min_degree(SweepRng& rng, int n, int p_num,
                                     int p_den, int floor_deg) {
  auto g = random_graph(rng, n, p_num, p_den);
  auto edges = g.edges();
  while (true) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (g.degree(u) < floor_deg && (v < 0 || g.degree(u) < g.degree(v)))
        v = u;
    if (v < 0) break;
    int w = rng.below(n);
    while (w == v || g.adjacent(v, w)) w = (w + 1) % n;
    edges.emplace_back(v, w);
    g = Graph(n, edges);
  }
  return g;
}

inline Graph random_2_connected(SweepRng& rng, int n, int p_num, int p_den) {
  for (int tries = 0; tries < 1000; ++tries) {
    auto g = random_graph(rng, n, p_num, p_den);
    if (is_2_connected(g)) return g;
  }
  return Graph::cycle(n);  // always 2-connected fallback
}

/// Random weak ladder realized as its own host graph (bare structure plus
/// optional noise edges). Total rungs <= max_total, k <= max_k.
struct RandomWeakLadder {
  Graph host;
  WeakLadder ladder;
};

inline RandomWeakLadder random_weak_ladder(SweepRng& rng, int max_total = 14,
                                           int max_k = 3,
                                           bool noise = false) {
  int total = rng.between(2, max_total);
  int n1 = rng.between(1, total - 1);
  int n2 = total - n1;
  int k = rng.between(0, max_k);
  int j = rng.between(0, 2 * k);  // interior vertices on the a-side path

  int base2 = 2 * n1;
  int conn = base2 + 2 * n2;
  int n = conn + 2 * k;
  std::vector<std::pair<int, int>> edges;
  auto ladder_edges = [&](int off, int m) {
    for (int i = 0; i < m; ++i)
      for (int d = -1; d <= 1; ++d) {
        int jj = i + d;
        if (jj < 0 || jj >= m) continue;
        edges.emplace_back(off + i, off + m + jj);  // a_i ~ b_j
      }
  };
  ladder_edges(0, n1);
  ladder_edges(base2, n2);

  Ladder l1, l2;
  for (int i = 0; i < n1; ++i) {
    l1.a.push_back(i);
    l1.b.push_back(n1 + i);
  }
  for (int i = 0; i < n2; ++i) {
    l2.a.push_back(base2 + i);
    l2.b.push_back(base2 + n2 + i);
  }

  Path p1, p2;
  p1.vertices.push_back(l1.a[0]);
  for (int t = 0; t < j; ++t) p1.vertices.push_back(conn + t);
  p1.vertices.push_back(l2.a[0]);
  p2.vertices.push_back(l1.b[0]);
  for (int t = j; t < 2 * k; ++t) p2.vertices.push_back(conn + t);
  p2.vertices.push_back(l2.b[0]);
  for (auto* p : {&p1, &p2})
    for (size_t i = 0; i + 1 < p->vertices.size(); ++i)
      edges.emplace_back(p->vertices[i], p->vertices[i + 1]);

  if (noise) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(1, 10)) edges.emplace_back(u, v);
  }

  RandomWeakLadder out;
  out.host = Graph(n, edges);
  out.ladder = WeakLadder(l1, l2, p1, p2);
  out.ladder.require_valid(out.host);
  return out;
}

/// All partitions of s into parts >= 2, ascending within each partition.
inline std::vector<std::vector<int>> partitions_min2(int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int min_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= left; ++p) {
      if (left - p == 1) continue;  // cannot finish with a part of 1
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, s, 2);
  return out;
}

// ---------------------------------------------------------------------------
// Sweep drivers
// ---------------------------------------------------------------------------

/// Exhaustive check of the spectrum bound |S_e| >= delta - 1 over all
/// 2-connected graphs with delta >= 3 and n >= 2*delta, for n <= n_max.
inline nlohmann::json verify_conjecture(int n_max) {
  nlohmann::json report;
  long checked = 0, confirmed = 0;
  nlohmann::json violations = nlohmann::json::array();
  auto levels = enumerate_graph_levels(n_max);
  for (int n = 4; n <= n_max; ++n) {
    for (uint64_t code : levels[n]) {
      Graph g = graph_from_code(code, n);
      int delta = min_degree(g);
      if (delta < 3 || n < 2 * delta || !is_2_connected(g)) continue;
      ++checked;
      auto spec = spectrum(g, n);
      if (int(spec.even_lengths.size()) >= delta - 1) {
        ++confirmed;
      } else {
        std::ostringstream edges;
        save_edge_list(edges, g);
        violations.push_back({{"n", n},
                              {"code", code},
                              {"delta", delta},
                              {"even_lengths", spec.even_lengths},
                              {"edge_list", edges.str()}});
      }
    }
  }
  report["mode"] = "conjecture";
  report["n_max"] = n_max;
  report["checked"] = checked;
  report["confirmed"] = confirmed;
  report["violations"] = violations;
  return report;
}

/// Randomized weak-ladder extraction sweep: every valid partition of every
/// sampled weak ladder must extract into a validated packing.
inline nlohmann::json verify_lemmas(uint64_t seed, long iters) {
  SweepRng rng(seed);
  long trials = 0, extractions = 0, defects = 0;
  nlohmann::json first_defect;
  for (long it = 0; it < iters; ++it) {
    auto rw = random_weak_ladder(rng, 14, 3, it % 4 == 3);
    ++trials;
    int total = rw.ladder.total_rungs();
    int k = rw.ladder.k;
    for (int s = 2; s + k <= total; ++s) {
      for (const auto& parts : partitions_min2(s)) {
        TargetPartition t(parts);
        ++extractions;
        try {
          auto packing = cycles_from_weak_ladder(rw.host, rw.ladder, t);
          packing.require_valid(rw.host, t);
        } catch (const defect_error& e) {
          ++defects;
          if (first_defect.is_null())
            first_defect = {{"iteration", it},
                            {"targets", parts},
                            {"what", e.what()}};
        }
      }
    }
    // exact-fill variant when the connectors contribute one rung of slack
    if (k == 1) {
      for (const auto& parts : partitions_min2(total)) {
        if (parts.back() <= 2) continue;
        TargetPartition t(parts);
        ++extractions;
        try {
          auto packing = cycles_from_weak_ladder_k1(rw.host, rw.ladder, t);
          packing.require_valid(rw.host, t);
        } catch (const defect_error& e) {
          ++defects;
          if (first_defect.is_null())
            first_defect = {{"iteration", it},
                            {"targets", parts},
                            {"k1", true},
                            {"what", e.what()}};
        }
      }
    }
  }
  nlohmann::json report;
  report["mode"] = "lemmas";
  report["seed"] = seed;
  report["weak_ladders"] = trials;
  report["extractions"] = extractions;
  report["defects"] = defects;
  if (!first_defect.is_null()) report["first_defect"] = first_defect;
  return report;
}

/// Obstruction-family grid plus randomized pipeline/oracle agreement.
inline nlohmann::json verify_theorem(uint64_t seed, long iters, int n_max) {
  nlohmann::json report;
  report["mode"] = "theorem";
  long obstructions = 0, violations = 0;
  nlohmann::json detail = nlohmann::json::array();

  auto expect_blocked = [&](const Graph& g, const ExtremalFamilyCert& cert) {
    auto oracle = oracle_pack(g, cert.blocked_partition, 16);
    bool blocked = oracle.verdict == OracleVerdict::infeasible;
    if (blocked)
      ++obstructions;
    else
      ++violations;
    detail.push_back({{"family", family_name(cert.family)},
                      {"params", cert.params},
                      {"blocked", blocked}});
  };

  for (int k = 0; k <= 3; ++k) {
    auto [g, cert] = gen_example1(3, 4, k);
    expect_blocked(g, cert);
  }
  {
    auto [g, cert] = gen_example1(2, 6, 3);
    expect_blocked(g, cert);
  }
  for (int n : {9, 11}) {
    auto [g, cert] = gen_example2(4, n);
    expect_blocked(g, cert);
  }
  {
    auto [g, cert] = gen_parity_4p2(3);
    expect_blocked(g, cert);
  }
  {
    auto [g, cert] = gen_parity_4p1(3);
    expect_blocked(g, cert);
  }

  // pipeline vs oracle on random 2-connected graphs
  SweepRng rng(seed);
  long agreed = 0, compared = 0;
  for (long it = 0; it < iters; ++it) {
    int n = rng.between(5, n_max);
    auto g = random_2_connected(rng, n, rng.between(30, 70), 100);
    int delta = min_degree(g);
    for (const auto& parts : partitions_min2(delta)) {
      TargetPartition t(parts);
      auto pr = pack_pipeline(g, t);
      auto or_ = oracle_pack(g, t, 16);
      bool pipeline_packs = pr.verdict == PipelineResult::Verdict::packed;
      ++compared;
      if (pipeline_packs == or_.feasible())
        ++agreed;
      else {
        ++violations;
        std::ostringstream edges;
        save_edge_list(edges, g);
        detail.push_back({{"disagreement", true},
                          {"targets", parts},
                          {"edge_list", edges.str()}});
      }
    }
  }
  report["grid_obstructions"] = obstructions;
  report["agreement_checked"] = compared;
  report["agreement"] = agreed;
  report["violations"] = violations;
  report["detail"] = detail;
  report["seed"] = seed;
  return report;
}

}  // namespace evencycle
