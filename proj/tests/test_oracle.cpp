#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minorlab/oracle.hpp"

using namespace minorlab;

namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer C5
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, e);
}

}  // namespace

TEST_CASE("chromatic numbers of standard graphs") {
  CHECK(oracle::chromatic_number(make_complete(4)) == 4);
  CHECK(oracle::chromatic_number(make_cycle(5)) == 3);
  CHECK(oracle::chromatic_number(petersen()) == 3);
  CHECK(oracle::chromatic_number(Graph(0)) == 0);
  CHECK(oracle::chromatic_number(Graph(3)) == 1);
  CHECK_THROWS_AS(oracle::chromatic_number(make_cycle(13)), budget_error);
}

TEST_CASE("coloring enumeration counts") {
  CHECK(oracle::count_colorings(Graph(1), 2) == 2);
  CHECK(oracle::count_colorings(make_complete(3), 3) == 6);
  CHECK(oracle::count_colorings(make_cycle(4), 2) == 2);
}

TEST_CASE("chromatic number agrees with enumeration emptiness") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) e.emplace_back(u, v);
    Graph g(n, e);
    int chi = oracle::chromatic_number(g);
    CHECK(oracle::count_colorings(g, chi) > 0);
    if (chi > 1) CHECK(oracle::count_colorings(g, chi - 1) == 0);
  }
}

TEST_CASE("minor search basics") {
  auto r = oracle::has_minor(make_complete(5), make_complete(5));
  REQUIRE(r.found());
  CHECK(validate_clique_witness(make_complete(5), *r.value, 5));
  for (const auto& bs : r.value->branch_sets) CHECK(bs.size() == 1);

  auto c6k3 = oracle::has_minor(make_cycle(6), make_complete(3));
  REQUIRE(c6k3.found());
  CHECK(validate_witness(make_cycle(6), *c6k3.value));

  CHECK(oracle::has_minor(make_complete(4), make_complete(5)).status == SearchStatus::absent);
}

TEST_CASE("minor search is monotone under adding edges") {
  std::mt19937 rng(5);
  Graph h = make_complete(3);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) e.emplace_back(u, v);
    Graph g(n, e);
    bool has = oracle::has_minor(g, h).found();
    // add one edge
    for (int u = 0; u < n && !has; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) {
          auto e2 = e;
          e2.emplace_back(u, v);
          Graph g2(n, e2);
          if (oracle::has_minor(g, h).found()) CHECK(oracle::has_minor(g2, h).found());
        }
  }
}

TEST_CASE("class membership per forbidden minors") {
  auto k4 = oracle::class_membership(make_complete(4), oracle::GraphClass::outerplanar);
  CHECK(k4.decided());
  CHECK_FALSE(k4.member);
  CHECK(oracle::class_membership(make_complete(4), oracle::GraphClass::planar).member);
  CHECK_FALSE(oracle::class_membership(make_complete_bipartite(2, 3), oracle::GraphClass::outerplanar).member);
  CHECK(oracle::class_membership(make_cycle(6), oracle::GraphClass::outerplanar).member);
  CHECK(oracle::class_membership(make_cycle(6), oracle::GraphClass::planar).member);
  CHECK_FALSE(oracle::class_membership(make_complete(5), oracle::GraphClass::planar).member);
  CHECK_FALSE(oracle::class_membership(make_complete_bipartite(3, 3), oracle::GraphClass::planar).member);
  CHECK(oracle::class_membership(petersen(), oracle::GraphClass::planar).member == false);
}

TEST_CASE("budget exhaustion reports unknown, never a verdict") {
  auto r = oracle::has_minor(petersen(), make_complete(5), SearchBudget(5));
  CHECK(r.status == SearchStatus::unknown);
}
