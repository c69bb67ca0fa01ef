#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "bipartite.hpp"
#include "extract.hpp"
#include "extremal_builder.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "solver.hpp"
#include "tau.hpp"

namespace evencycle {

struct PipelineOptions {
  Rat beta{1, 10};   // extremal-detection threshold
  Rat tau{1, 12};    // near-complete threshold
  int oracle_cap = 16;
  int beta_cap = 14;
  bool allow_any_sum = false;
};

struct ObstructionReport {
  // "family": a known extremal family matched structurally;
  // "oracle": exhaustive search proved the request infeasible.
  std::string kind;
  std::optional<Ex1Params> ex1;
  std::optional<Ex2Params> ex2;
  bool oracle_confirmed = false;
};

struct PipelineResult {
  enum class Verdict { packed, obstruction, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  CyclePacking packing;
  std::optional<ObstructionReport> obstruction;
  std::string route;  // which stage produced the result
};

/// Operational mirror of the main trichotomy: structural obstruction
/// detectors, then the extremal-certificate ladder route, then the dense
/// constructive routes, then the exhaustive oracle within its cap.
inline PipelineResult pack_pipeline(const Graph& g, const TargetPartition& t,
                                    const PipelineOptions& opts = {}) {
  int delta = min_degree(g);
  if (!opts.allow_any_sum && t.sum() != delta)
    throw std::invalid_argument("targets must sum to the minimum degree");
  if (!is_2_connected(g))
    throw std::invalid_argument("graph must be 2-connected");

  PipelineResult res;
  auto packed = [&](CyclePacking p, std::string route) {
    p.require_valid(g, t);
    res.verdict = PipelineResult::Verdict::packed;
    res.packing = std::move(p);
    res.route = std::move(route);
    return res;
  };
  if (t.empty()) return packed({}, "empty");

  // (a) structural obstruction families
  if (t.count() == 2 && t.targets[0] == t.targets[1] &&
      2 * t.targets[0] == delta) {
    if (auto p1 = detect_example1(g); p1 && p1->q == delta) {
      res.verdict = PipelineResult::Verdict::obstruction;
      res.obstruction = ObstructionReport{"family", p1, std::nullopt, false};
      res.route = "detector-ex1";
      if (g.size() <= opts.oracle_cap) {
        auto check = oracle_pack(g, t, opts.oracle_cap);
        if (check.feasible())
          throw defect_error("family matched but a packing exists");
        res.obstruction->oracle_confirmed = true;
      }
      return res;
    }
  }
  bool all_two = t.targets.front() == 2 && t.targets.back() == 2;
  if (all_two) {
    if (auto p2 = detect_example2(g); p2 && p2->q == delta) {
      res.verdict = PipelineResult::Verdict::obstruction;
      res.obstruction = ObstructionReport{"family", std::nullopt, p2, false};
      res.route = "detector-ex2";
      if (g.size() <= opts.oracle_cap) {
        auto check = oracle_pack(g, t, opts.oracle_cap);
        if (check.feasible())
          throw defect_error("family matched but a packing exists");
        res.obstruction->oracle_confirmed = true;
      }
      return res;
    }
  }

  // (b) extremal certificate -> constructive ladder or recognized obstruction
  if (2 * t.sum() <= g.size()) {
    auto beta_res = detect_beta_extremal(g, opts.beta, opts.beta_cap);
    if (beta_res.cert) {
      try {
        auto out = build_ladder_extremal(g, *beta_res.cert, t);
        switch (out.kind) {
          case ExtremalOutcome::Kind::ladder:
            return packed(cycles_from_ladder(g, out.ladder, t),
                          "extremal-ladder");
          case ExtremalOutcome::Kind::packing:
            return packed(out.packing, "extremal-splice");
          case ExtremalOutcome::Kind::example2:
            if (all_two && out.ex2 && out.ex2->q == delta) {
              res.verdict = PipelineResult::Verdict::obstruction;
              res.obstruction =
                  ObstructionReport{"family", std::nullopt, out.ex2, false};
              res.route = "extremal-ex2";
              return res;
            }
            break;
          case ExtremalOutcome::Kind::inconclusive:
            break;
        }
      } catch (const defect_error&) {
        // fall through to the remaining routes
      }
    }

    // (c) dense constructive routes
    if (auto cert = check_tau_complete(g, opts.tau)) {
      if (g.size() / 2 >= t.sum()) {
        auto rung = detail::adjacent_pair(g, cert->major, cert->major);
        if (rung) {
          auto lad = build_ladder_first_rung(g, *cert, rung->first,
                                             rung->second);
          if (lad) return packed(cycles_from_ladder(g, *lad, t), "tau-ladder");
        }
      }
    }
    VertexSet sx(0), sy(0);
    if (bipartition(g, sx, sy) && !sx.empty() && !sy.empty()) {
      if (sx.size() < sy.size()) std::swap(sx, sy);
      // sy is the smaller side now
      std::optional<BipartiteDenseCert> cert;
      if (sx.size() == sy.size()) {
        cert = make_bipartite_cert(g, sx, sy, Rat{1, 101});
      } else {
        Rat ratio{sx.size(), sy.size()};
        Rat tau_u{sy.size(), 300 * sx.size()};
        cert = make_bipartite_cert(g, sx, sy, tau_u, ratio);
      }
      if (cert && sy.size() >= t.sum()) {
        auto bl = build_ladder_bipartite(g, *cert);
        if (bl)
          return packed(cycles_from_ladder(g, bl->ladder, t),
                        "bipartite-ladder");
      }
    }
  }

  // (d) exhaustive oracle within its cap
  auto oracle = oracle_pack(g, t, opts.oracle_cap);
  if (oracle.verdict == OracleVerdict::feasible)
    return packed(oracle.packing, "oracle");
  if (oracle.verdict == OracleVerdict::infeasible) {
    res.verdict = PipelineResult::Verdict::obstruction;
    res.obstruction =
        ObstructionReport{"oracle", std::nullopt, std::nullopt, true};
    res.route = "oracle";
    return res;
  }

  // (e) nothing decided below the cap
  res.verdict = PipelineResult::Verdict::inconclusive;
  res.route = "over-cap";
  return res;
}

inline nlohmann::json to_json(const PipelineResult& r,
                              const TargetPartition& t) {
  nlohmann::json j;
  j["targets"] = t.targets;
  switch (r.verdict) {
    case PipelineResult::Verdict::packed:
      j["verdict"] = "packed";
      j["packing"] = to_json(r.packing)["cycles"];
      break;
    case PipelineResult::Verdict::obstruction: {
      j["verdict"] = "obstruction";
      nlohmann::json o;
      o["kind"] = r.obstruction->kind;
      if (r.obstruction->ex1)
        o["family"] = {{"name", "ex1"},
                       {"l", r.obstruction->ex1->l},
                       {"q", r.obstruction->ex1->q},
                       {"k", r.obstruction->ex1->k}};
      if (r.obstruction->ex2)
        o["family"] = {{"name", "ex2"},
                       {"q", r.obstruction->ex2->q},
                       {"n", r.obstruction->ex2->n}};
      o["oracle_confirmed"] = r.obstruction->oracle_confirmed;
      j["obstruction"] = o;
      break;
    }
    case PipelineResult::Verdict::inconclusive:
      j["verdict"] = "inconclusive";
      break;
  }
  j["route"] = r.route;
  return j;
}

}  // namespace evencycle
