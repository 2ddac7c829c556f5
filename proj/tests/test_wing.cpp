#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <random>

#include "minorlab/wing.hpp"

using namespace minorlab;

namespace {

// P4 figure 1(a): v1..v6 = 0..5 in line order
Graph fig1a() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {2, 5}, {0, 2}, {3, 5}});
}

Graph graph_from_mask(int n, uint64_t mask) {
  std::vector<std::pair<int, int>> e;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask & (uint64_t{1} << bit)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_wing_graph(std::mt19937& rng, int n, double density) {
  // random order, then a random non-crossing arc subset
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> arcs;  // position pairs
  std::vector<std::pair<int, int>> chosen;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) arcs.emplace_back(a, b);
  std::shuffle(arcs.begin(), arcs.end(), rng);
  for (auto [a, b] : arcs) {
    if (std::uniform_real_distribution<>(0, 1)(rng) > density) continue;
    bool crosses = false;
    for (auto [c, d] : chosen)
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
        crosses = true;
        break;
      }
    if (!crosses) chosen.emplace_back(a, b);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : chosen)
    edges.emplace_back(order[static_cast<size_t>(a)], order[static_cast<size_t>(b)]);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("is_wing1 on the P4 figures") {
  Graph g = fig1a();
  CHECK(is_wing1({0, 1, 2, 3, 4, 5}, g));
  // figure 1(b)'s edge set forced to one side: (v2,v5) and (v3,v6) interleave
  Graph h(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {2, 5}, {1, 4}, {0, 3}});
  CHECK_FALSE(is_wing1({0, 1, 2, 3, 4, 5}, h));
  CHECK(is_wing1({0, 1}, Graph(2, {{0, 1}})));
  CHECK_THROWS_AS(is_wing1({0, 0, 1}, make_path(3)), std::invalid_argument);
}

TEST_CASE("outer vertices of the fig-1a embedding") {
  WingEmbedding w{{0, 1, 2, 3, 4, 5}, fig1a()};
  auto info = outer_vertices(w);
  CHECK(info.outer == std::vector<int>{0, 5});
  CHECK(info.inner == VertexSet{1, 2, 3, 4});
}

TEST_CASE("find_perimeter_trace picks the pinned pairs") {
  CHECK(find_perimeter_trace(make_cycle(5)).walk == std::vector<int>{0, 1});
  CHECK(find_perimeter_trace(make_path(3)).walk == std::vector<int>{0, 1, 2});
  CHECK(find_perimeter_trace(Graph(1)).walk == std::vector<int>{0});
  CHECK_THROWS_AS(find_perimeter_trace(make_complete(4)), std::invalid_argument);
}

TEST_CASE("trace_check outerplanar-set kind") {
  // C4 with t={0,2}: K2,2 with uppers {0},{2}
  auto r = trace_check(make_cycle(4), Trace{Trace::Kind::outerplanar_set, {0, 2}});
  REQUIRE(r.status == SearchStatus::found);
  CHECK_FALSE(*r.value);
  auto r2 = trace_check(make_cycle(5), Trace{Trace::Kind::outerplanar_set, {0, 1}});
  REQUIRE(r2.status == SearchStatus::found);
  CHECK(*r2.value);
  auto r3 = trace_check(Graph(1), Trace{Trace::Kind::outerplanar_set, {0}});
  CHECK(*r3.value);
}

TEST_CASE("trace_check planar-walk kind accepts P1's fig 1(b) walk") {
  // v1..v7 = 0..6; v3 = 2 is a cut vertex appearing twice in the walk
  Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}, {2, 6}, {6, 0}});
  Trace walk{Trace::Kind::planar_walk, {0, 1, 2, 3, 4, 5, 2, 6}};
  auto r = trace_check(g, walk);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(*r.value);
  auto single = trace_check(Graph(1), Trace{Trace::Kind::planar_walk, {0}});
  CHECK(*single.value);
  // a hexagon with two crossing chords is no perimeter: the chords are
  // vertex-disjoint paths between interleaved walk positions
  Graph c6chords(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}});
  auto bad = trace_check(c6chords, Trace{Trace::Kind::planar_walk, {0, 1, 2, 3, 4, 5}});
  REQUIRE(bad.status == SearchStatus::found);
  CHECK_FALSE(*bad.value);
}

TEST_CASE("build_wing1 on pinned instances") {
  auto r = build_wing1(fig1a());
  REQUIRE(r.ok());
  CHECK(is_wing1(r.embedding->order, fig1a()));

  auto k4 = build_wing1(make_complete(4));
  REQUIRE_FALSE(k4.ok());
  CHECK(k4.forbidden_name == "K4");
  CHECK(validate_witness(make_complete(4), *k4.forbidden));

  auto k23 = build_wing1(make_complete_bipartite(2, 3));
  REQUIRE_FALSE(k23.ok());
  CHECK(k23.forbidden_name == "K2,3");

  auto k1 = build_wing1(Graph(1));
  REQUIRE(k1.ok());
  CHECK(k1.embedding->order == std::vector<int>{0});
}

TEST_CASE("build_wing1 matches the forbidden-minor oracle exhaustively to n=5") {
  for (int n = 0; n <= 5; ++n) {
    uint64_t total = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t mask = 0; mask < total; ++mask) {
      Graph g = graph_from_mask(n, mask);
      bool built = build_wing1(g).ok();
      bool outer = oracle::class_membership(g, oracle::GraphClass::outerplanar).member;
      if (built != outer) {
        CAPTURE(n, mask);
        REQUIRE(built == outer);
      }
    }
  }
}

TEST_CASE("build_wing1 keeps the chosen trace as outer vertices in order") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_wing_graph(rng, n, 0.5);
    if (!is_connected(g)) continue;
    auto trace = find_perimeter_trace(g);
    auto r = build_wing1(g);
    REQUIRE(r.ok());
    auto info = outer_vertices(*r.embedding);
    // every trace member is outer, in the same relative order
    std::vector<int> projected;
    for (int v : info.outer)
      if (std::find(trace.walk.begin(), trace.walk.end(), v) != trace.walk.end()) projected.push_back(v);
    CHECK(projected == trace.walk);
  }
}

TEST_CASE("outer vertices of built embeddings pass trace_check") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_wing_graph(rng, n, 0.5);
    auto r = build_wing1(g);
    REQUIRE(r.ok());
    auto info = outer_vertices(*r.embedding);
    auto chk = trace_check(g, Trace{Trace::Kind::outerplanar_set, info.outer});
    REQUIRE(chk.status == SearchStatus::found);
    CHECK(*chk.value);
  }
}

TEST_CASE("peeling a trace vertex keeps the trace property") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = random_wing_graph(rng, n, 0.5);
    if (!is_connected(g)) continue;
    auto trace = find_perimeter_trace(g);
    for (int u : trace.walk) {
      auto del = apply_minor_action(g, MinorAction::del_vertex(u));
      std::set<int> next;
      for (int v : trace.walk)
        if (v != u) next.insert(del.relabel[static_cast<size_t>(v)]);
      for (int w : g.neighbors(u)) next.insert(del.relabel[static_cast<size_t>(w)]);
      Trace t2{Trace::Kind::outerplanar_set, std::vector<int>(next.begin(), next.end())};
      auto chk = trace_check(del.graph, t2);
      REQUIRE(chk.status == SearchStatus::found);
      CHECK(*chk.value);
    }
  }
}

TEST_CASE("vertex-related sets on the P4 figure") {
  WingEmbedding w{{0, 1, 2, 3, 4, 5}, fig1a()};
  auto sets = vertex_related_sets(w);
  bool has123 = false, has346 = false;
  for (const auto& s : sets) {
    if (s.members == VertexSet{0, 1, 2}) has123 = true;  // v1,v2,v3
    if (s.members == VertexSet{2, 3, 5}) has346 = true;  // v3,v4,v6
  }
  CHECK(has123);
  CHECK(has346);

  WingEmbedding path{{0, 1, 2, 3}, make_path(4)};
  auto ps = vertex_related_sets(path);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].members == VertexSet{0, 1, 2, 3});

  WingEmbedding k2{{0, 1}, make_complete(2)};
  auto ks = vertex_related_sets(k2);
  REQUIRE(ks.size() == 1);
  CHECK(ks[0].members == VertexSet{0, 1});
}

TEST_CASE("find_low_degree returns a degree <= 2 vertex; count bound holds") {
  WingEmbedding w{{0, 1, 2, 3, 4, 5}, fig1a()};
  int v = find_low_degree(w);
  CHECK(w.graph.degree(v) <= 2);

  WingEmbedding k1{{0}, Graph(1)};
  CHECK(find_low_degree(k1) == 0);

  std::mt19937 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_wing_graph(rng, n, 0.6);
    auto r = build_wing1(g);
    REQUIRE(r.ok());
    CHECK(g.degree(find_low_degree(*r.embedding)) <= 2);
    auto info = outer_vertices(*r.embedding);
    int low = 0;
    for (int u = 0; u < n; ++u)
      if (g.degree(u) <= 2) ++low;
    CHECK(low >= static_cast<int>(info.outer.size()) - 1);
  }
}

TEST_CASE("build_wing1 runtime is near-linear on random wing corpora") {
  std::mt19937 rng(73);
  auto time_for = [&](int n) {
    Graph g = random_wing_graph(rng, n, 0.4);
    auto t0 = std::chrono::steady_clock::now();
    auto r = build_wing1(g);
    auto t1 = std::chrono::steady_clock::now();
    REQUIRE(r.ok());
    return std::chrono::duration<double>(t1 - t0).count();
  };
  double t200 = 0, t800 = 0;
  for (int i = 0; i < 3; ++i) t200 += time_for(200);
  for (int i = 0; i < 3; ++i) t800 += time_for(800);
  // linear predicts x4; allow factor 2 on the slope
  CHECK(t800 <= std::max(8 * t200, 0.5));
}
