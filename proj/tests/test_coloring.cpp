#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minorlab/coloring.hpp"

using namespace minorlab;

TEST_CASE("is_proper on the spec examples") {
  Graph k3 = make_complete(3);
  CHECK(is_proper(k3, ColorAssignment(3, {1, 2, 3})));
  CHECK_FALSE(is_proper(k3, ColorAssignment(3, {1, 1, 2})));
  CHECK(is_proper(make_cycle(5), ColorAssignment(3, {1, 2, 1, 2, 3})));
  CHECK_THROWS_AS(is_proper(k3, ColorAssignment(3, {1, 0, 2})), std::invalid_argument);
}

TEST_CASE("frequency vectors compare lexicographically, highest color first") {
  // star K1,3: hub=2/leaves=1 -> <1,3>; swapped -> <3,1>
  Graph star = make_star(3);
  ColorAssignment a(2, {2, 1, 1, 1}), b(2, {1, 2, 2, 2});
  CHECK(frequency_vector(a).counts == std::vector<int>{1, 3});
  CHECK(frequency_vector(b).counts == std::vector<int>{3, 1});
  CHECK(frequency_compare(a, b) == Ordering::less);
  CHECK(frequency_compare(a, a) == Ordering::equal);
  CHECK_THROWS_AS(frequency_compare(a, ColorAssignment(3, {1, 2, 3, 2})), std::invalid_argument);
  CHECK(is_proper(star, a));
}

TEST_CASE("min frequency coloring reaches the global minimum NV") {
  CHECK(frequency_vector(min_frequency_coloring(make_complete(3), 3)).counts == std::vector<int>{1, 1, 1});
  CHECK(frequency_vector(min_frequency_coloring(make_cycle(5), 3)).counts == std::vector<int>{1, 2, 2});
  CHECK(frequency_vector(min_frequency_coloring(make_star(3), 2)).counts == std::vector<int>{1, 3});
  CHECK_THROWS_AS(min_frequency_coloring(make_complete(4), 3), std::invalid_argument);
}

TEST_CASE("min frequency coloring cross-checked against full enumeration") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) e.emplace_back(u, v);
    Graph g(n, e);
    int chi = oracle::chromatic_number(g);
    int k = std::min(n, chi + (trial % 2));
    auto got = min_frequency_coloring(g, k);
    CHECK(is_proper(g, got));
    auto best = frequency_vector(got);
    oracle::enumerate_colorings(g, k, [&](const ColorAssignment& cl) {
      CHECK_FALSE(frequency_vector(cl) < best);
      return true;
    });
  }
}

TEST_CASE("color exchange is an involution and compositions reverse") {
  ColorAssignment cl(4, {1, 2, 3, 4, 2});
  auto f = ColorExchange::single(1, 2);
  CHECK(color_exchange(color_exchange(cl, f), f).colors == cl.colors);

  ColorAssignment k2(2, {1, 2});
  CHECK(color_exchange(k2, ColorExchange::single(1, 2)).colors == std::vector<int>{2, 1});

  ColorExchange comp{{{1, 2}, {2, 3}, {1, 4}}};
  auto round = color_exchange(color_exchange(cl, comp), comp.reversed());
  CHECK(round.colors == cl.colors);
  CHECK_THROWS_AS(color_exchange(cl, ColorExchange::single(1, 9)), std::invalid_argument);
}

TEST_CASE("color exchange preserves properness") {
  Graph g = make_wheel(5);
  auto cl = min_frequency_coloring(g, 4);
  CHECK(is_proper(g, color_exchange(cl, ColorExchange::single(2, 4))));
}

TEST_CASE("kernel check: V always, small U never, wheel rim never") {
  Graph w5 = make_wheel(5);
  REQUIRE(oracle::chromatic_number(w5) == 4);
  CHECK(kernel_check(w5, {0, 1, 2, 3, 4, 5}, 4));
  CHECK_FALSE(kernel_check(w5, {0, 1, 2}, 4));        // pigeonhole
  CHECK_FALSE(kernel_check(w5, {1, 2, 3, 4, 5}, 4));  // rim gets exactly 3 colors
  CHECK_THROWS_AS(kernel_check(w5, {0, 1}, 3), std::invalid_argument);
}

TEST_CASE("P2 reduction lemmas at k, on small random graphs") {
  // with CL of minimum frequency vector: dropping all but one vertex of the
  // top color class keeps the chromatic number; the survivor's neighborhood
  // is then a kernel set at k-1
  std::mt19937 rng(23);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 25; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) e.emplace_back(u, v);
    Graph g(n, e);
    int k = oracle::chromatic_number(g);
    if (k != 3 && k != 4) continue;
    ++done;
    auto cl = min_frequency_coloring(g, k);
    VertexSet top;
    for (int v = 0; v < n; ++v)
      if (cl.color(v) == k) top.push_back(v);
    REQUIRE(!top.empty());
    int keep = top.front();
    // delete all-but-one of the color-k class
    VertexSet survivors;
    for (int v = 0; v < n; ++v)
      if (cl.color(v) != k || v == keep) survivors.push_back(v);
    auto sub = induced_subgraph(g, survivors);
    CHECK(oracle::chromatic_number(sub.graph) == k);
    // v's neighbors form a kernel set of g minus the whole top class, at k-1
    VertexSet rest;
    for (int v = 0; v < n; ++v)
      if (cl.color(v) != k) rest.push_back(v);
    auto base = induced_subgraph(g, rest);
    if (oracle::chromatic_number(base.graph) == k - 1) {
      VertexSet nv;
      for (int w : g.neighbors(keep))
        if (base.relabel[static_cast<size_t>(w)] != -1)
          nv.push_back(base.relabel[static_cast<size_t>(w)]);
      std::sort(nv.begin(), nv.end());
      CHECK(kernel_check(base.graph, nv, k - 1));
    }
  }
  CHECK(done >= 10);
}

TEST_CASE("combine_colorings across a clique cut") {
  // two triangles sharing an edge {1,2}
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  ColorAssignment left(3, {1, 2, 3, 0});
  ColorAssignment right(3, {0, 3, 1, 2});  // mismatched on W
  auto combined = combine_colorings(g, {1, 2}, left, right);
  CHECK(is_proper(g, combined));
  CHECK(combined.colors_used() <= 3);

  // cut vertex: always alignable
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  ColorAssignment l2(3, {1, 2, 3, 0, 0});
  ColorAssignment r2(3, {0, 0, 1, 2, 3});
  CHECK(is_proper(bowtie, combine_colorings(bowtie, {2}, l2, r2)));

  // W independent pair: not a clique
  Graph c4 = make_cycle(4);
  ColorAssignment cl_l(2, {1, 2, 1, 0}), cl_r(2, {1, 0, 1, 2});
  CHECK_THROWS_AS(combine_colorings(c4, {0, 2}, cl_l, cl_r), std::invalid_argument);
}
