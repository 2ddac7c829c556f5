#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minorlab/minors.hpp"

using namespace minorlab;

namespace {

Graph random_graph(std::mt19937& rng, int n, int denom = 2) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 2) < 2 / denom || rng() % 2) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("kx_minor_on finds witnesses anchored on U") {
  Graph k4 = make_complete(4);
  auto r = kx_minor_on(k4, {0, 1, 2, 3}, 4);
  REQUIRE(r.found());
  CHECK(validate_clique_witness(k4, *r.value, 4));
  CHECK(witness_on_set(*r.value, {0, 1, 2, 3}));

  Graph c5 = make_cycle(5);
  auto r2 = kx_minor_on(c5, {0, 1, 2}, 3);
  REQUIRE(r2.found());
  CHECK(validate_clique_witness(c5, *r2.value, 3));
  CHECK(witness_on_set(*r2.value, {0, 1, 2}));

  CHECK(kx_minor_on(c5, {0, 1, 2, 3, 4}, 4).status == SearchStatus::absent);
}

TEST_CASE("kx_minor_on agrees with the oracle's unconstrained search") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    Graph g = random_graph(rng, n);
    VertexSet all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    for (int x = 3; x <= 4; ++x) {
      auto mine = kx_minor_on(g, all, x);
      auto theirs = oracle::has_minor(g, make_complete(x));
      REQUIRE(mine.status != SearchStatus::unknown);
      REQUIRE(theirs.status != SearchStatus::unknown);
      CHECK(mine.found() == theirs.found());
      if (mine.found()) CHECK(validate_clique_witness(g, *mine.value, x));
    }
  }
}

TEST_CASE("P2: 2-connected graphs have a K3 minor on any three vertices") {
  std::mt19937 rng(31);
  int done = 0;
  for (int trial = 0; trial < 300 && done < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    Graph g = random_graph(rng, n);
    if (!is_connected(g) || vertex_connectivity(g) < 2) continue;
    ++done;
    for (int reps = 0; reps < 5; ++reps) {
      VertexSet u;
      while (u.size() < 3) {
        int v = static_cast<int>(rng() % n);
        if (!std::binary_search(u.begin(), u.end(), v)) {
          u.push_back(v);
          std::sort(u.begin(), u.end());
        }
      }
      auto r = kx_minor_on(g, u, 3);
      REQUIRE(r.found());
      CHECK(validate_clique_witness(g, *r.value, 3));
      CHECK(witness_on_set(*r.value, u));
    }
  }
  CHECK(done >= 10);
}

TEST_CASE("P2 corollary: K4 minor on v and its neighbors in 3-connected graphs") {
  std::mt19937 rng(37);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 20; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    Graph g = random_graph(rng, n);
    if (!is_connected(g) || vertex_connectivity(g) < 3) continue;
    ++done;
    int v = static_cast<int>(rng() % n);
    REQUIRE(g.degree(v) >= 3);
    VertexSet u = g.neighbors(v);
    u.push_back(v);
    std::sort(u.begin(), u.end());
    auto r = kx_minor_on(g, u, 4);
    REQUIRE(r.found());
    CHECK(validate_clique_witness(g, *r.value, 4));
  }
  CHECK(done >= 10);
}

TEST_CASE("bipartite minors with side constraints") {
  Graph k23 = make_complete_bipartite(2, 3);
  auto ident = bipartite_minor_on(k23, {}, {}, 2, 3);
  REQUIRE(ident.found());
  CHECK(validate_witness(k23, *ident.value));

  // P3's twin-cycle plus an apex adjacent to {c1,c3,c5} carries K3,3
  // c1..c5 = 0..4, apex v = 5
  Graph g(6, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 0}, {5, 2}, {5, 4}});
  auto r = bipartite_minor_on(g, {1, 3, 5}, {0, 2, 4}, 3, 3);
  REQUIRE(r.found());
  CHECK(validate_witness(g, *r.value));
  for (int i = 0; i < 3; ++i) CHECK(witness_on_set({{r.value->branch_sets[static_cast<size_t>(i)]}, {}}, {1, 3, 5}));
  for (int i = 3; i < 6; ++i) CHECK(witness_on_set({{r.value->branch_sets[static_cast<size_t>(i)]}, {}}, {0, 2, 4}));

  Graph c4 = make_cycle(4);
  auto r2 = bipartite_minor_on(c4, {0, 2}, {}, 2, 2);
  REQUIRE(r2.found());
  CHECK(validate_witness(c4, *r2.value));

  // C4 has no K2,2 minor with both uppers inside {0,1}
  CHECK(bipartite_minor_on(c4, {0, 1}, {}, 2, 2).status == SearchStatus::absent);
}

TEST_CASE("extend_set follows the case rules") {
  // delete a vertex of U swaps in its neighbors
  Graph star = make_star(2);  // 0 hub, leaves 1,2
  TrackedSet ts{{0}, {}};
  auto [ts2, ar] = extend_set(ts, star, MinorAction::del_vertex(0));
  CHECK(ts2.current == VertexSet{ar.relabel[1], ar.relabel[2]});

  // contracting an edge with an endpoint in U swaps in the merged vertex
  Graph p3 = make_path(3);
  TrackedSet t3{{0}, {}};
  auto [t4, ar2] = extend_set(t3, p3, MinorAction::contract(0, 1));
  CHECK(t4.current == VertexSet{ar2.relabel[0]});

  // disjoint actions leave U alone
  TrackedSet t5{{0}, {}};
  auto [t6, ar3] = extend_set(t5, p3, MinorAction::del_edge(1, 2));
  CHECK(t6.current == VertexSet{0});
  CHECK(t6.history.size() == 1);
}

TEST_CASE("abs_contract on the P2 figure") {
  // u1=0, w1=1, w2=2, w3=3, u2=4 as in the reduction figure
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}, {2, 3}});
  EquivRelation r{{{1, 2}, {3}}};
  auto res = abs_contract(g, {1, 2, 3}, r);
  CHECK(res.graph.vertex_count() == 4);
  int w12 = res.relabel[1];
  CHECK(res.relabel[2] == w12);
  CHECK(res.graph.has_edge(w12, res.relabel[0]));
  CHECK(res.graph.has_edge(w12, res.relabel[4]));
  CHECK(res.graph.has_edge(w12, res.relabel[3]));

  // identity relation: isomorphic graph
  EquivRelation ident{{{1}, {2}, {3}}};
  CHECK(abs_contract(g, {1, 2, 3}, ident).graph == g);

  // grouping adjacent vertices is not admissive
  EquivRelation bad{{{2, 3}, {1}}};
  CHECK_THROWS_AS(abs_contract(g, {1, 2, 3}, bad), std::invalid_argument);
}

TEST_CASE("strengthened graph: contraction never lowers the chromatic number") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    Graph g = random_graph(rng, n);
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) s.push_back(v);
    if (s.size() < 2) continue;
    auto rels = admissive_relations(g, s);
    if (rels.empty()) continue;
    const auto& r = rels[rng() % rels.size()];
    auto res = abs_contract(g, s, r);
    CHECK(oracle::chromatic_number(res.graph) >= oracle::chromatic_number(g));
  }
}

TEST_CASE("consistent cut sets from the P2 figures") {
  // Fig 1(a): path w1-w2-w3 plus u joined to all three on each side
  Graph fig_a(5, {{0, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {4, 2}});
  EquivRelation r1{{{0, 2}, {1}}};
  auto out = is_consistent_cut_set(fig_a, {0, 1, 2}, r1);
  REQUIRE(out.status == SearchStatus::found);
  CHECK(*out.value);

  // cut vertex with the trivial relation: 1-clique
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  EquivRelation triv{{{2}}};
  auto out2 = is_consistent_cut_set(bowtie, {2}, triv);
  REQUIRE(out2.status == SearchStatus::found);
  CHECK(*out2.value);

  // Fig 1(b): w1..w6 = 0..5 with edges w1w2, w5w6; each side has u1 adjacent
  // to w2..w5 and u2 adjacent to w1,w6
  std::vector<std::pair<int, int>> e{{0, 1}, {4, 5}};
  for (int w : {1, 2, 3, 4}) e.emplace_back(6, w);
  e.emplace_back(7, 0);
  e.emplace_back(7, 5);
  for (int w : {1, 2, 3, 4}) e.emplace_back(8, w);
  e.emplace_back(9, 0);
  e.emplace_back(9, 5);
  Graph fig_b(10, e);
  EquivRelation r2{{{0, 5}, {1, 2, 3, 4}}};
  auto out3 = is_consistent_cut_set(fig_b, {0, 1, 2, 3, 4, 5}, r2);
  REQUIRE(out3.status == SearchStatus::found);
  CHECK(*out3.value);

  CHECK_THROWS_AS(is_consistent_cut_set(make_complete(4), {0}, EquivRelation{{{0}}}),
                  std::invalid_argument);
}

TEST_CASE("formal graphs: apex stays K5- and K3,3-minor-free") {
  VertexSet all4{0, 1, 2, 3};
  auto k4 = is_formal(make_complete(4), all4);
  REQUIRE(k4.status == SearchStatus::found);
  CHECK_FALSE(*k4.value);  // apex over K4 makes K5

  auto c4 = is_formal(make_cycle(4), all4);
  REQUIRE(c4.status == SearchStatus::found);
  CHECK(*c4.value);  // the 4-wheel is planar

  auto k23 = is_formal(make_complete_bipartite(2, 3), {2, 3, 4});
  REQUIRE(k23.status == SearchStatus::found);
  CHECK_FALSE(*k23.value);  // apex over the 3-side makes K3,3
}
