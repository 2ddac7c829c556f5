#include <catch2/catch_amalgamated.hpp>

#include "minorlab/corpus.hpp"

using namespace minorlab;

TEST_CASE("all_small enumerates every labeled graph") {
  long count = 0;
  all_small(3, [&](const CorpusItem&) {
    ++count;
    return true;
  });
  CHECK(count == 8);
  CHECK_THROWS_AS(all_small(8, [](const CorpusItem&) { return true; }), std::invalid_argument);
}

TEST_CASE("random_wing1 items validate against their own order") {
  for (int t = 0; t < 30; ++t) {
    auto item = random_wing1(6, 0.5, 99, t);
    REQUIRE(item.wing_order.has_value());
    CHECK(is_wing1(*item.wing_order, item.graph));
    CHECK_FALSE(validate_side_data(item).has_value());
  }
}

TEST_CASE("maximal_planar items carry 3n-6 edges and a boundary triangle") {
  for (int n : {3, 5, 8, 12}) {
    auto item = maximal_planar(n, 5, n);
    CHECK(item.graph.edge_count() == 3 * n - 6);
    REQUIRE(item.boundary_walk.has_value());
    CHECK(item.boundary_walk->size() == 3);
    CHECK_FALSE(validate_side_data(item).has_value());
    if (n <= 9) {
      auto mem = oracle::class_membership(item.graph, oracle::GraphClass::planar);
      REQUIRE(mem.decided());
      CHECK(mem.member);
    }
  }
}

TEST_CASE("generation is reproducible byte for byte") {
  auto a = random_wing1(9, 0.4, 1234, 7);
  auto b = random_wing1(9, 0.4, 1234, 7);
  CHECK(a.graph == b.graph);
  CHECK(*a.wing_order == *b.wing_order);
  auto c = maximal_planar(9, 77, 3);
  auto d = maximal_planar(9, 77, 3);
  CHECK(c.graph == d.graph);
}

TEST_CASE("corrupted side data is caught at load") {
  auto item = random_wing1(6, 0.5, 4, 0);
  std::swap((*item.wing_order)[0], (*item.wing_order)[3]);
  bool still_fine = is_wing1(*item.wing_order, item.graph);
  if (!still_fine) CHECK(validate_side_data(item).has_value());
  auto mp = maximal_planar(6, 4, 0);
  mp.boundary_walk = std::vector<int>{0, 0, 1};
  CHECK(validate_side_data(mp).has_value());
}

TEST_CASE("random wing systems are rule-conformant") {
  for (int t = 0; t < 30; ++t) {
    auto item = random_wing1(3 + t % 8, 0.5, 2000 + t);
    WingEmbedding emb{*item.wing_order, item.graph};
    auto cs = random_wing_system(emb, 40 + t);
    auto trace = derived_trace(emb, cs);
    CHECK(validate_system(item.graph, trace, cs).empty());
  }
}

// --- serialization and diagrams ---------------------------------------------

#include <sstream>

#include "minorlab/diagram.hpp"
#include "minorlab/json_io.hpp"
#include "minorlab/suite.hpp"

TEST_CASE("graph json round trip and edge-list reader") {
  Graph g = make_wheel(5);
  auto j = graph_to_json(g);
  CHECK(graph_from_json(j) == g);
  // canonical order: u < v, lexicographic
  auto edges = j["edges"];
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    CHECK(edges[i][0].get<int>() <= edges[i][1].get<int>());
    CHECK(std::pair(edges[i][0].get<int>(), edges[i][1].get<int>()) <
          std::pair(edges[i + 1][0].get<int>(), edges[i + 1][1].get<int>()));
  }
  std::istringstream in("0 1\n1 2\n3\n");
  Graph h = graph_from_edge_list(in);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 2);
}

TEST_CASE("dot output round-trips through the edge-list reader") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}});
  std::istringstream in(emit_dot(g));
  CHECK(graph_from_edge_list(in) == g);
  // isolated top vertex survives via the node declarations
  Graph lonely(3, {{0, 1}});
  std::istringstream in2(emit_dot(lonely));
  CHECK(graph_from_edge_list(in2) == lonely);
}

TEST_CASE("svg arc diagram is deterministic and complete") {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {2, 5}, {0, 2}, {3, 5}});
  CorpusItem item;
  item.graph = g;
  item.wing_order = std::vector<int>{0, 1, 2, 3, 4, 5};
  auto svg = emit_diagram(item, "svg-arc");
  CHECK(svg == emit_diagram(item, "svg-arc"));
  size_t arcs = 0, at = 0;
  while ((at = svg.find("<path", at)) != std::string::npos) {
    ++arcs;
    ++at;
  }
  CHECK(arcs == 9);
  CorpusItem k1;
  k1.graph = Graph(1);
  k1.wing_order = std::vector<int>{0};
  CHECK(emit_diagram(k1, "svg-arc").find("circle") != std::string::npos);
  CorpusItem no_order;
  no_order.graph = g;
  CHECK_THROWS_AS(emit_diagram(no_order, "svg-arc"), DiagramError);
}

TEST_CASE("witness, coloring, system, item json round trips") {
  MinorWitness w{{{0, 1}, {2}, {3, 4}}, {{0, 1}, {1, 2}}};
  auto w2 = witness_from_json(witness_to_json(w));
  CHECK(w2.branch_sets == w.branch_sets);
  CHECK(w2.model_edges == w.model_edges);

  ColorAssignment cl(3, {1, 2, 0, 3});
  auto cl2 = coloring_from_json(coloring_to_json(cl), 4);
  CHECK(cl2.colors == cl.colors);

  ConstraintSystem cs;
  cs.mode = ConstraintSystem::Mode::p4a3;
  cs.clusters = {Cluster{{0, 1}}, Cluster{{1}}};
  cs.relations = {{0, 1, Rel::neq}};
  cs.divisions = {{0, 1}};
  auto cs2 = system_from_json(system_to_json(cs));
  CHECK(cs2.mode == cs.mode);
  CHECK(cs2.clusters.size() == 2);
  CHECK(cs2.relations == cs.relations);
  CHECK(cs2.divisions == cs.divisions);

  auto item = maximal_planar(6, 3, 1);
  auto item2 = item_from_json(item_to_json(item));
  CHECK(item2.graph == item.graph);
  CHECK(*item2.boundary_walk == *item.boundary_walk);
}

TEST_CASE("suite reports are order-independent and archives replay") {
  SuiteConfig cfg;
  cfg.item_cap = 12;
  auto a = run_suite("min-degree", cfg).to_jsonl();
  auto b = run_suite("min-degree", cfg).to_jsonl();
  CHECK(a == b);
  // archive a deliberate counterexample: corrupt side data caught at load
  auto item = maximal_planar(6, 4, 0);
  item.boundary_walk = std::vector<int>{0, 0, 1};
  CHECK(validate_side_data(item).has_value());
}
