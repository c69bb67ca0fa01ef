#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "ladder.hpp"

namespace evencycle {

/// Exact nonnegative rational, used wherever thresholds like beta*n must be
/// compared without floating point.
struct Rat {
  long long num = 0;
  long long den = 1;

  /// ceil(r * m) for integer m >= 0.
  long long ceil_times(long long m) const {
    return (num * m + den - 1) / den;
  }
  /// r * m <= value?
  bool times_at_most(long long m, long long value) const {
    return num * m <= value * den;
  }
  double to_double() const { return double(num) / double(den); }
};

/// Parses "p/q" or a decimal like "0.05" exactly.
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long p = std::stoll(s.substr(0, slash));
    long long q = std::stoll(s.substr(slash + 1));
    if (q <= 0 || p < 0) throw std::invalid_argument("bad rational");
    return {p, q};
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return {std::stoll(s), 1};
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  long long den = 1;
  for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  long long num = std::stoll(digits);
  if (num < 0) throw std::invalid_argument("bad rational");
  return {num, den};
}

// ---------------------------------------------------------------------------
// Exhaustive packing oracle
// ---------------------------------------------------------------------------

enum class OracleVerdict { feasible, infeasible, over_cap };

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::over_cap;
  CyclePacking packing;  // filled when feasible

  bool feasible() const { return verdict == OracleVerdict::feasible; }
};

namespace detail {

// Enumerates simple cycles of length `len` whose minimum vertex is `start`,
// restricted to `avail`, in canonical order (second vertex < last vertex
// kills the reflected duplicate). Stops when cb returns true.
inline bool for_each_cycle_from(const Graph& g, const VertexSet& avail,
                                int start, int len,
                                std::vector<int>& path, VertexSet& used,
                                const std::function<bool(const std::vector<int>&)>& cb,
                                long* budget) {
  int depth = int(path.size());
  if (budget && --*budget < 0) return false;
  if (depth == len) {
    if (g.adjacent(path.back(), start) && path[1] < path.back())
      return cb(path);
    return false;
  }
  int u = path.back();
  for (int w = g.neighbors(u).first(); w >= 0; w = g.neighbors(u).next(w)) {
    if (w <= start || used.contains(w) || !avail.contains(w)) continue;
    used.insert(w);
    path.push_back(w);
    if (for_each_cycle_from(g, avail, start, len, path, used, cb, budget))
      return true;
    path.pop_back();
    used.erase(w);
  }
  return false;
}

}  // namespace detail

/// Exhaustive backtracking for vertex-disjoint cycles realizing t: targets
/// are placed largest-first, cycles are enumerated with a canonical start
/// (smallest vertex, direction fixed) so symmetric duplicates are never
/// revisited, and equal-length cycles are forced into ascending start order.
/// Complete search: `infeasible` is a proof whenever n <= cap.
inline OracleResult oracle_pack(const Graph& g, const TargetPartition& t,
                                int cap = 16) {
  OracleResult res;
  if (g.size() > cap) {
    res.verdict = OracleVerdict::over_cap;
    return res;
  }
  if (2 * t.sum() > g.size()) {
    res.verdict = OracleVerdict::infeasible;
    return res;
  }

  // slots sorted by length descending; ties keep ascending slot order
  std::vector<int> order(t.count());
  for (int i = 0; i < t.count(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return t.targets[x] > t.targets[y];
  });

  std::vector<std::vector<int>> chosen(t.count());
  VertexSet used(g.size());

  auto place = [&](auto&& self, int pos, int min_start_if_equal) -> bool {
    if (pos == t.count()) return true;
    int slot = order[pos];
    int len = 2 * t.targets[slot];
    VertexSet avail = VertexSet::full(g.size());
    avail -= used;
    for (int start = avail.first(); start >= 0; start = avail.next(start)) {
      if (pos > 0 && t.targets[order[pos - 1]] == t.targets[slot] &&
          start <= min_start_if_equal)
        continue;
      std::vector<int> path{start};
      VertexSet local = used;
      local.insert(start);
      bool done = detail::for_each_cycle_from(
          g, avail, start, len, path, local,
          [&](const std::vector<int>& cyc) {
            chosen[slot] = cyc;
            VertexSet saved = used;
            for (int v : cyc) used.insert(v);
            if (self(self, pos + 1, start)) return true;
            used = saved;
            return false;
          },
          nullptr);
      if (done) return true;
    }
    return false;
  };

  if (place(place, 0, -1)) {
    res.verdict = OracleVerdict::feasible;
    res.packing.cycles = std::move(chosen);
    res.packing.require_valid(g, t);
  } else {
    res.verdict = OracleVerdict::infeasible;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Cycle spectrum
// ---------------------------------------------------------------------------

struct Spectrum {
  std::set<int> even_lengths;
  std::set<int> odd_lengths;
  bool exhaustive = true;  // false when lengths were only sampled

  bool has(int len) const {
    return (len % 2 == 0 ? even_lengths : odd_lengths).count(len) > 0;
  }
};

namespace detail {

inline bool exists_cycle_of_length(const Graph& g, int len, long budget) {
  if (len < 3 || len > g.size()) return false;
  VertexSet all = VertexSet::full(g.size());
  long* b = budget > 0 ? &budget : nullptr;
  // the cycle's minimum vertex is its start, so start <= n - len
  for (int start = 0; start <= g.size() - len; ++start) {
    std::vector<int> path{start};
    VertexSet used(g.size());
    used.insert(start);
    std::function<bool(const std::vector<int>&)> accept =
        [](const std::vector<int>&) { return true; };
    if (for_each_cycle_from(g, all, start, len, path, used, accept, b))
      return true;
    if (b && *b < 0) return false;  // budget exhausted, not a proof
  }
  return false;
}

}  // namespace detail

/// All cycle lengths present in g, split by parity. Exact for n <= cap;
/// above the cap each length search runs under a step budget and the
/// `exhaustive` flag is cleared.
inline Spectrum spectrum(const Graph& g, int cap = 14) {
  Spectrum s;
  s.exhaustive = g.size() <= cap;
  long budget = s.exhaustive ? 0 : 500000;
  VertexSet sx(0), sy(0);
  bool bip = bipartition(g, sx, sy);
  for (int len = 3; len <= g.size(); ++len) {
    if (bip && len % 2 == 1) continue;  // bipartite graphs have no odd cycle
    if (detail::exists_cycle_of_length(g, len, budget))
      (len % 2 == 0 ? s.even_lengths : s.odd_lengths).insert(len);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Beta-extremal detection
// ---------------------------------------------------------------------------

/// Witness of near-bipartite-complement structure: a large set B that is
/// nearly independent except for at most ceil(4*beta*n) exceptional
/// vertices. Desk-scale degree thresholds are rounded up to whole vertices.
struct BetaExtremalCert {
  Rat beta;
  VertexSet b_set;
  VertexSet exceptional;

  bool validate(const Graph& g) const {
    int n = g.size();
    int delta = min_degree(g);
    long long bn_ceil = beta.ceil_times(n);
    if (!exceptional.is_subset_of(b_set)) return false;
    // |B| >= (1 - delta/n - beta) n  <=>  (|B| + delta) * den + num*n >= n*den
    if ((b_set.size() + delta) * beta.den + beta.num * n < n * beta.den)
      return false;
    int bad = 0;
    bool ok = true;
    b_set.for_each([&](int v) {
      int internal = g.neighbors(v).intersection_size(b_set);
      if (internal > bn_ceil) {
        ++bad;
        if (!exceptional.contains(v)) ok = false;
      }
    });
    return ok && bad <= beta.ceil_times(4LL * n);
  }
};

struct BetaExtremalResult {
  std::optional<BetaExtremalCert> cert;
  bool exhaustive = false;  // when true, an empty cert proves non-extremality
};

/// Searches for a qualifying B. Exhaustive over all subsets for n <= cap
/// (largest qualifying B, ties by lexicographically smallest bitmask);
/// iterative peeling of the highest-internal-degree vertex beyond. Graphs
/// with delta > n/2 are never reported extremal: the size bound degenerates
/// there and the structure the certificate describes cannot occur.
inline BetaExtremalResult detect_beta_extremal(const Graph& g, Rat beta,
                                               int cap = 14) {
  if (beta.num <= 0 || beta.num >= beta.den)
    throw std::invalid_argument("beta must be in (0,1)");
  int n = g.size();
  BetaExtremalResult res;
  res.exhaustive = n <= cap;
  if (n == 0 || 2 * min_degree(g) > n) return res;

  auto make_cert = [&](const VertexSet& b) {
    BetaExtremalCert cert;
    cert.beta = beta;
    cert.b_set = b;
    cert.exceptional = VertexSet(n);
    long long bn_ceil = beta.ceil_times(n);
    b.for_each([&](int v) {
      if (g.neighbors(v).intersection_size(b) > bn_ceil)
        cert.exceptional.insert(v);
    });
    return cert;
  };

  if (res.exhaustive) {
    // masks ascend, so the first hit of each size has the smallest bitmask
    int best_size = 0;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
      int size = std::popcount(mask);
      if (size <= best_size) continue;
      VertexSet b(n);
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) b.insert(v);
      auto cert = make_cert(b);
      if (cert.validate(g)) {
        best_size = size;
        res.cert = std::move(cert);
      }
    }
    return res;
  }

  VertexSet b = VertexSet::full(n);
  while (true) {
    auto cert = make_cert(b);
    if (cert.validate(g)) {
      res.cert = std::move(cert);
      return res;
    }
    // size bound: stop once B cannot satisfy it any more
    int delta = min_degree(g);
    if ((b.size() - 1 + delta) * beta.den + beta.num * n < n * beta.den)
      return res;
    int worst = -1, worst_deg = -1;
    b.for_each([&](int v) {
      int internal = g.neighbors(v).intersection_size(b);
      if (internal > worst_deg) {
        worst_deg = internal;
        worst = v;
      }
    });
    b.erase(worst);
  }
}

}  // namespace evencycle
