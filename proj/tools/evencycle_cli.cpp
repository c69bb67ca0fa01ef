// Command-line front end: generate obstruction families, solve packing
// instances, query the oracle and the cycle spectrum, run detectors, and
// drive verification sweeps. Reports are JSON on stdout unless --output.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "evencycle/enumerate.hpp"
#include "evencycle/extract.hpp"
#include "evencycle/families.hpp"
#include "evencycle/io.hpp"
#include "evencycle/pipeline.hpp"
#include "evencycle/solver.hpp"
#include "evencycle/verify.hpp"

using nlohmann::json;
using namespace evencycle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitObstruction = 2;
constexpr int kExitViolation = 3;
constexpr int kExitUsage = 64;

struct Caps {
  int oracle = 16;
  int spectrum = 14;
  int beta = 14;
};

Caps caps_from_env() {
  Caps caps;
  if (const char* env = std::getenv("EVENCYCLE_CAPS")) {
    std::string s(env);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    in >> caps.oracle >> caps.spectrum >> caps.beta;
  }
  return caps;
}

TargetPartition parse_targets(const std::string& spec) {
  std::vector<int> parts;
  std::string s = spec;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  int v;
  while (in >> v) parts.push_back(v);
  if (parts.empty()) throw std::invalid_argument("no targets given");
  return TargetPartition(parts);
}

void emit(const json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(output);
    out << j.dump(2) << "\n";
  }
}

json labels_json(const LoadedGraph& lg) {
  bool plain = true;
  for (size_t i = 0; i < lg.labels.size() && plain; ++i)
    plain = lg.labels[i] == std::to_string(i);
  if (plain) return nullptr;
  return lg.labels;
}

void write_family(const Graph& g, const ExtremalFamilyCert& cert,
                  const std::string& output) {
  std::ostringstream header;
  header << "evencycle gen " << family_name(cert.family);
  for (auto& [k, v] : cert.params) header << " " << k << "=" << v;
  if (output.empty()) {
    save_edge_list(std::cout, g, header.str());
    std::cerr << to_json(cert).dump(2) << "\n";
  } else {
    std::ofstream ef(output + ".edges");
    save_edge_list(ef, g, header.str());
    std::ofstream cf(output + ".cert.json");
    cf << to_json(cert).dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"even-cycle packing toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Caps caps = caps_from_env();

  std::string output;
  bool timing = false;
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_flag("--timing", timing, "include elapsed_ms in reports");

  // --- gen -----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an obstruction family");
  std::string family;
  int gl = 3, gq = 4, gk = 0, gn = 9, gp = 3;
  gen->add_option("family", family, "ex1|ex2|par4p2|par4p1")->required();
  gen->add_option("--l", gl, "clique count (ex1)");
  gen->add_option("--q", gq, "even degree parameter (ex1, ex2)");
  gen->add_option("--k", gk, "hub edges 0..3 (ex1)");
  gen->add_option("--n", gn, "order (ex2)");
  gen->add_option("--p", gp, "odd parameter (par4p2, par4p1)");

  // --- solve ---------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "run the packing pipeline");
  std::string solve_file, solve_targets, beta_str = "1/10", tau_str = "1/12";
  bool allow_any_sum = false;
  solve->add_option("file", solve_file, "edge-list file")->required();
  solve->add_option("--targets", solve_targets, "comma separated, e.g. 2,3")
      ->required();
  solve->add_flag("--allow-any-sum", allow_any_sum,
                  "skip the sum == min degree check");
  solve->add_option("--beta", beta_str, "extremal detection threshold");
  solve->add_option("--tau", tau_str, "near-complete threshold");

  // --- oracle --------------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth");
  std::string oracle_file, oracle_targets;
  oracle_cmd->add_option("file", oracle_file)->required();
  oracle_cmd->add_option("--targets", oracle_targets)->required();
  oracle_cmd->add_option("--cap", caps.oracle, "exhaustive size cap");

  // --- spectrum ------------------------------------------------------------
  auto* spec_cmd = app.add_subcommand("spectrum", "cycle lengths by parity");
  std::string spec_file;
  spec_cmd->add_option("file", spec_file)->required();
  spec_cmd->add_option("--cap", caps.spectrum, "exact size cap");

  // --- detect --------------------------------------------------------------
  auto* detect_cmd = app.add_subcommand("detect", "structural detectors");
  std::string detect_file, detect_family = "all", detect_beta = "1/10";
  detect_cmd->add_option("file", detect_file)->required();
  detect_cmd->add_option("--family", detect_family, "ex1|ex2|beta|all");
  detect_cmd->add_option("--beta", detect_beta, "beta threshold");

  // --- verify --------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "verification sweeps");
  std::string mode;
  int n_max = 8;
  uint64_t seed = 1;
  long iters = 100;
  verify_cmd->add_option("--mode", mode, "conjecture|theorem|lemmas")
      ->required();
  verify_cmd->add_option("--n-max", n_max, "exhaustive order bound");
  verify_cmd->add_option("--seed", seed, "sweep seed");
  verify_cmd->add_option("--iters", iters, "randomized iterations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto started = std::chrono::steady_clock::now();
  auto maybe_time = [&](json& j) {
    if (timing)
      j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  };

  try {
    if (gen->parsed()) {
      std::pair<Graph, ExtremalFamilyCert> out = [&] {
        if (family == "ex1") return gen_example1(gl, gq, gk);
        if (family == "ex2") return gen_example2(gq, gn);
        if (family == "par4p2") return gen_parity_4p2(gp);
        if (family == "par4p1") return gen_parity_4p1(gp);
        throw CLI::ValidationError("family", "unknown family " + family);
      }();
      write_family(out.first, out.second, output);
      return kExitOk;
    }

    if (solve->parsed()) {
      auto lg = load_edge_list_file(solve_file);
      if (lg.duplicate_edges > 0)
        std::cerr << "warning: " << lg.duplicate_edges
                  << " duplicate edge(s) dropped\n";
      auto t = parse_targets(solve_targets);
      PipelineOptions opts;
      opts.beta = parse_rational(beta_str);
      opts.tau = parse_rational(tau_str);
      opts.oracle_cap = caps.oracle;
      opts.beta_cap = caps.beta;
      opts.allow_any_sum = allow_any_sum;
      auto res = pack_pipeline(lg.graph, t, opts);
      json j = to_json(res, t);
      if (auto lbl = labels_json(lg); !lbl.is_null()) j["labels"] = lbl;
      maybe_time(j);
      emit(j, output);
      return res.verdict == PipelineResult::Verdict::obstruction
                 ? kExitObstruction
                 : kExitOk;
    }

    if (oracle_cmd->parsed()) {
      auto lg = load_edge_list_file(oracle_file);
      auto t = parse_targets(oracle_targets);
      auto res = oracle_pack(lg.graph, t, caps.oracle);
      json j;
      j["targets"] = t.targets;
      j["verdict"] = res.verdict == OracleVerdict::feasible     ? "feasible"
                     : res.verdict == OracleVerdict::infeasible ? "infeasible"
                                                                : "over_cap";
      if (res.feasible()) j["packing"] = res.packing.cycles;
      if (auto lbl = labels_json(lg); !lbl.is_null()) j["labels"] = lbl;
      maybe_time(j);
      emit(j, output);
      return res.verdict == OracleVerdict::infeasible ? kExitObstruction
                                                      : kExitOk;
    }

    if (spec_cmd->parsed()) {
      auto lg = load_edge_list_file(spec_file);
      auto s = spectrum(lg.graph, caps.spectrum);
      json j;
      j["even"] = s.even_lengths;
      j["odd"] = s.odd_lengths;
      j["exhaustive"] = s.exhaustive;
      j["min_degree"] = lg.graph.size() ? min_degree(lg.graph) : 0;
      if (auto lbl = labels_json(lg); !lbl.is_null()) j["labels"] = lbl;
      maybe_time(j);
      emit(j, output);
      return kExitOk;
    }

    if (detect_cmd->parsed()) {
      auto lg = load_edge_list_file(detect_file);
      json j;
      bool any = false;
      if (detect_family == "ex1" || detect_family == "all") {
        if (auto p = detect_example1(lg.graph)) {
          j["ex1"] = {{"l", p->l}, {"q", p->q}, {"k", p->k}};
          any = true;
        } else {
          j["ex1"] = nullptr;
        }
      }
      if (detect_family == "ex2" || detect_family == "all") {
        if (auto p = detect_example2(lg.graph)) {
          j["ex2"] = {{"q", p->q}, {"n", p->n}};
          any = true;
        } else {
          j["ex2"] = nullptr;
        }
      }
      if (detect_family == "beta" || detect_family == "all") {
        auto res = detect_beta_extremal(lg.graph, parse_rational(detect_beta),
                                        caps.beta);
        if (res.cert) {
          j["beta_extremal"] = {{"b_set", res.cert->b_set.to_vector()},
                                {"exceptional",
                                 res.cert->exceptional.to_vector()},
                                {"exhaustive", res.exhaustive}};
          any = true;
        } else {
          j["beta_extremal"] = {{"cert", nullptr},
                                {"exhaustive", res.exhaustive}};
        }
      }
      maybe_time(j);
      emit(j, output);
      return any ? kExitObstruction : kExitOk;
    }

    if (verify_cmd->parsed()) {
      json j;
      if (mode == "conjecture") {
        j = verify_conjecture(n_max);
      } else if (mode == "lemmas") {
        j = verify_lemmas(seed, iters);
      } else if (mode == "theorem") {
        j = verify_theorem(seed, iters, std::min(n_max, 12));
      } else {
        std::cerr << "unknown mode " << mode << "\n";
        return kExitUsage;
      }
      maybe_time(j);
      emit(j, output);
      long violations = 0;
      if (j.contains("violations")) {
        if (j["violations"].is_array())
          violations = long(j["violations"].size());
        else
          violations = j["violations"].get<long>();
      }
      if (j.contains("defects")) violations += j["defects"].get<long>();
      return violations == 0 ? kExitOk : kExitViolation;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const defect_error& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
