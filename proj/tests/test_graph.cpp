#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "evencycle/disjoint_paths.hpp"
#include "evencycle/enumerate.hpp"
#include "evencycle/graph.hpp"
#include "evencycle/io.hpp"
#include "evencycle/verify.hpp"

using namespace evencycle;

namespace {

// Definition-level 2-connectivity: connected, n >= 3, and still connected
// after deleting any single vertex.
bool two_connected_by_definition(const Graph& g) {
  if (g.size() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.size(); ++v) {
    VertexSet rest = VertexSet::full(g.size());
    rest.erase(v);
    auto sub = induced_subgraph(g, rest);
    if (!is_connected(sub.graph)) return false;
  }
  return true;
}

// Exhaustive minimum over disjoint path pairs, for cross-checking the flow
// search on small graphs.
int brute_min_disjoint_total(const Graph& g, const VertexSet& u1,
                             const VertexSet& u2) {
  int best = -1;
  std::vector<int> p1, p2;
  VertexSet used(g.size());

  auto paths2 = [&](auto&& self, int u) -> void {
    p2.push_back(u);
    used.insert(u);
    if (u2.contains(u)) {
      int total = int(p1.size() + p2.size());
      if (best < 0 || total < best) best = total;
    } else {
      g.neighbors(u).for_each([&](int w) {
        if (!used.contains(w) && !u1.contains(w)) self(self, w);
      });
    }
    used.erase(u);
    p2.pop_back();
  };
  auto paths1 = [&](auto&& self, int u) -> void {
    p1.push_back(u);
    used.insert(u);
    if (u2.contains(u)) {
      u1.for_each([&](int s2) {
        if (!used.contains(s2)) paths2(paths2, s2);
      });
    } else {
      g.neighbors(u).for_each([&](int w) {
        if (!used.contains(w) && !u1.contains(w)) self(self, w);
      });
    }
    used.erase(u);
    p1.pop_back();
  };
  u1.for_each([&](int s) { paths1(paths1, s); });
  return best;
}

Graph two_k4_sharing_vertex() {
  // vertices 0..3 and 3..6 each complete
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u <= 3; ++u)
    for (int v = u + 1; v <= 3; ++v) e.emplace_back(u, v);
  for (int u = 3; u <= 6; ++u)
    for (int v = u + 1; v <= 6; ++v) e.emplace_back(u, v);
  return Graph(7, e);
}

}  // namespace

TEST_CASE("min_degree on standard graphs") {
  CHECK(min_degree(Graph::complete(5)) == 4);
  CHECK(min_degree(Graph::cycle(6)) == 2);
  CHECK(min_degree(Graph::complete_bipartite(1, 3)) == 1);  // star
  CHECK_THROWS_AS(min_degree(Graph::empty(0)), std::invalid_argument);
}

TEST_CASE("is_2_connected on standard graphs") {
  CHECK(is_2_connected(Graph::cycle(5)));
  CHECK_FALSE(is_2_connected(Graph::path(4)));
  CHECK_FALSE(is_2_connected(two_k4_sharing_vertex()));
  CHECK_FALSE(is_2_connected(Graph::complete(2)));
}

TEST_CASE("is_2_connected agrees with the deletion definition") {
  auto levels = enumerate_graph_levels(7);
  for (int n = 1; n <= 7; ++n)
    for (uint64_t code : levels[n]) {
      Graph g = graph_from_code(code, n);
      REQUIRE(is_2_connected(g) == two_connected_by_definition(g));
    }
  SweepRng rng(11);
  for (int it = 0; it < 300; ++it) {
    int n = rng.between(8, 10);
    auto g = random_graph(rng, n, rng.between(20, 80), 100);
    REQUIRE(is_2_connected(g) == two_connected_by_definition(g));
  }
}

TEST_CASE("induced subgraphs") {
  VertexSet s(5);
  for (int v : {0, 2, 4}) s.insert(v);
  auto sub = induced_subgraph(Graph::complete(5), s);
  CHECK(sub.graph == Graph::complete(3));
  CHECK(sub.to_host == std::vector<int>{0, 2, 4});

  VertexSet alt(6);
  for (int v : {0, 2, 4}) alt.insert(v);
  auto sub2 = induced_subgraph(Graph::cycle(6), alt);
  CHECK(sub2.graph.edge_count() == 0);
  CHECK(sub2.graph.size() == 3);

  VertexSet side(6);
  for (int v : {0, 1, 2}) side.insert(v);
  auto sub3 = induced_subgraph(Graph::complete_bipartite(3, 3), side);
  CHECK(sub3.graph.edge_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(Graph::complete(3), VertexSet(3)),
                  std::invalid_argument);
}

TEST_CASE("two disjoint paths on a 4-cycle") {
  Graph c4 = Graph::cycle(4);
  VertexSet u1(4), u2(4);
  u1.insert(0);
  u1.insert(2);
  u2.insert(1);
  u2.insert(3);
  auto r = two_disjoint_paths(c4, u1, u2);
  REQUIRE(r.has_value());
  CHECK(r->total_vertices() == 4);
  CHECK(r->first.length() == 2);
  CHECK(r->second.length() == 2);
}

TEST_CASE("two disjoint paths infeasible through a star center") {
  Graph star = Graph::complete_bipartite(1, 3);  // 0 is the center
  VertexSet u1(4), u2(4);
  u1.insert(1);
  u1.insert(2);
  u2.insert(0);
  u2.insert(3);
  CHECK_FALSE(two_disjoint_paths(star, u1, u2).has_value());
}

TEST_CASE("two disjoint paths preconditions") {
  Graph c4 = Graph::cycle(4);
  VertexSet a(4), b(4);
  a.insert(0);
  a.insert(1);
  b.insert(1);
  b.insert(2);
  CHECK_THROWS_AS(two_disjoint_paths(c4, a, b), std::invalid_argument);
}

TEST_CASE("two disjoint paths match the brute-force minimum") {
  SweepRng rng(23);
  int feasible_seen = 0;
  for (int it = 0; it < 200; ++it) {
    int n = rng.between(5, 8);
    auto g = random_graph(rng, n, rng.between(25, 70), 100);
    VertexSet u1(n), u2(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    u1.insert(perm[0]);
    u1.insert(perm[1]);
    u2.insert(perm[2]);
    u2.insert(perm[3]);
    int brute = brute_min_disjoint_total(g, u1, u2);
    auto r = two_disjoint_paths(g, u1, u2);
    if (brute < 0) {
      REQUIRE_FALSE(r.has_value());
    } else {
      ++feasible_seen;
      REQUIRE(r.has_value());
      REQUIRE(r->total_vertices() == brute);
      CHECK(r->first.valid_in(g));
      CHECK(r->second.valid_in(g));
    }
  }
  CHECK(feasible_seen > 50);
}

TEST_CASE("two disjoint paths never infeasible on 2-connected hosts") {
  SweepRng rng(37);
  for (int it = 0; it < 100; ++it) {
    int n = rng.between(6, 12);
    auto g = random_2_connected(rng, n, rng.between(30, 70), 100);
    VertexSet u1(n), u2(n);
    u1.insert(0);
    u1.insert(1);
    u2.insert(n - 2);
    u2.insert(n - 1);
    auto r = two_disjoint_paths(g, u1, u2);
    REQUIRE(r.has_value());
    CHECK(u1.contains(r->first.front()));
    CHECK(u2.contains(r->first.back()));
  }
}

TEST_CASE("short disjoint paths in dense 2-connected graphs") {
  SweepRng rng(41);
  Graph g = random_graph_min_degree(rng, 40, 40, 100, 16);
  REQUIRE(min_degree(g) >= 16);  // alpha = 0.4
  REQUIRE(is_2_connected(g));
  VertexSet u1(40), u2(40);
  u1.insert(0);
  u1.insert(1);
  u2.insert(38);
  u2.insert(39);
  auto r = two_disjoint_paths(g, u1, u2);
  REQUIRE(r.has_value());
  CHECK(r->total_vertices() <= 25);  // 10 / alpha
}

TEST_CASE("path trichotomy on small graphs") {
  Graph k4 = Graph::complete(4);
  auto r1 = path_trichotomy(k4, VertexSet::full(4));
  REQUIRE(std::holds_alternative<HamPath>(r1));
  CHECK(std::get<HamPath>(r1).path.length() == 4);

  Graph star = Graph::complete_bipartite(1, 3);
  auto r2 = path_trichotomy(star, VertexSet::full(4));
  REQUIRE(std::holds_alternative<DominatingPath>(r2));
  CHECK(std::get<DominatingPath>(r2).path.length() == 3);

  // two K5's joined by a single edge: delta = 4, n = 10 >= 8
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  for (int u = 5; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) e.emplace_back(u, v);
  e.emplace_back(4, 5);
  Graph joined(10, e);
  auto r3 = path_trichotomy(joined, VertexSet::full(10));
  REQUIRE(std::holds_alternative<HamPath>(r3));
  auto& hp = std::get<HamPath>(r3).path;
  CHECK(hp.length() == 10);
  CHECK(hp.valid_in(joined));
}

TEST_CASE("path trichotomy witnesses re-validate") {
  SweepRng rng(53);
  for (int it = 0; it < 60; ++it) {
    int n = rng.between(6, 12);
    auto g = random_graph(rng, n, rng.between(15, 60), 100);
    auto comps = connected_components(g);
    const VertexSet* comp = nullptr;
    for (auto& c : comps)
      if (!comp || c.size() > comp->size()) comp = &c;
    if (!comp || comp->size() < 2 * min_degree(g) || comp->size() < 2)
      continue;
    auto r = path_trichotomy(g, *comp);
    if (auto* h = std::get_if<HamPath>(&r)) {
      CHECK(h->path.valid_in(g));
      CHECK(h->path.length() == comp->size());
    } else if (auto* d = std::get_if<DominatingPath>(&r)) {
      CHECK(d->path.valid_in(g));
      VertexSet outside = *comp;
      for (int v : d->path.vertices) outside.erase(v);
      outside.for_each([&](int v) {
        VertexSet nb = g.neighbors(v);
        CHECK_FALSE(nb.intersects(outside));
      });
    } else {
      auto& two = std::get<TwoLongPaths>(r);
      CHECK(two.first.valid_in(g));
      CHECK(two.second.valid_in(g));
      CHECK(two.first.length() + two.second.length() > 3 * min_degree(g));
    }
  }
}

TEST_CASE("edge list loader") {
  std::istringstream in(
      "# sample\n"
      "a b\n"
      "b c\n"
      "c a  # triangle\n"
      "\n"
      "a b\n");
  auto lg = load_edge_list(in);
  CHECK(lg.graph.size() == 3);
  CHECK(lg.graph.edge_count() == 3);
  CHECK(lg.duplicate_edges == 1);
  CHECK(lg.labels == std::vector<std::string>{"a", "b", "c"});

  std::istringstream bad("x x\n");
  CHECK_THROWS_AS(load_edge_list(bad), parse_error);
  std::istringstream bad2("x y z\n");
  CHECK_THROWS_AS(load_edge_list(bad2), parse_error);
}

TEST_CASE("vertex connectivity spot checks") {
  CHECK(vertex_connectivity(Graph::complete(5)) == 4);
  CHECK(vertex_connectivity(Graph::cycle(6)) == 2);
  CHECK(vertex_connectivity(Graph::path(4)) == 1);
  CHECK(vertex_connectivity(two_k4_sharing_vertex()) == 1);
  CHECK(vertex_connectivity(Graph::complete_bipartite(3, 5)) == 3);
}
