// Corpus generation with ground-truth side data.  All randomness flows
// through SplitMix64 with explicit algorithms (Fisher-Yates shuffles, modulo
// draws), so corpora are byte-reproducible across platforms and languages.
#pragma once

#include <array>
#include <functional>
#include <optional>

#include "minorlab/constraint.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/oracle.hpp"
#include "minorlab/wing.hpp"

namespace minorlab {

struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t bound) { return next() % bound; }
  double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<size_t>(below(i))]);
  }
};

struct CorpusItem {
  Graph graph;
  std::string generator;
  uint64_t seed = 0;
  long index = 0;
  std::optional<std::vector<int>> wing_order;     // random_wing1
  std::optional<std::vector<int>> boundary_walk;  // maximal_planar
  std::optional<int> known_chromatic;
};

// Side data must describe the graph it rides with.
inline std::optional<std::string> validate_side_data(const CorpusItem& item) {
  const int n = item.graph.vertex_count();
  if (item.wing_order) {
    if (static_cast<int>(item.wing_order->size()) != n) return "wing order is not a permutation";
    try {
      if (!is_wing1(*item.wing_order, item.graph)) return "wing order admits crossing arcs";
    } catch (const std::exception& e) {
      return e.what();
    }
  }
  if (item.boundary_walk) {
    for (int v : *item.boundary_walk)
      if (!item.graph.has_vertex(v)) return "boundary walk vertex out of range";
    for (size_t i = 0; i < item.boundary_walk->size(); ++i) {
      int a = (*item.boundary_walk)[i];
      int b = (*item.boundary_walk)[(i + 1) % item.boundary_walk->size()];
      if (item.boundary_walk->size() > 1 && a == b) return "boundary walk repeats a vertex consecutively";
    }
    if (n <= 10) {
      auto chk = trace_check(item.graph, Trace{Trace::Kind::planar_walk, *item.boundary_walk});
      if (chk.status == SearchStatus::found && !*chk.value) return "boundary walk fails the crossing condition";
    }
  }
  if (item.known_chromatic && n <= 12) {
    if (oracle::chromatic_number(item.graph) != *item.known_chromatic) return "chromatic side data is wrong";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generators.

// Every labeled graph on n vertices, mask order.  n <= 7.
inline void all_small(int n, const std::function<bool(const CorpusItem&)>& emit) {
  if (n > 7) throw std::invalid_argument("all_small: capped at n = 7");
  const int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (int b = 0; b < bits; ++b)
      if (mask & (uint64_t{1} << b)) e.push_back(pairs[static_cast<size_t>(b)]);
    CorpusItem item{Graph(n, e), "all_small", 0, static_cast<long>(mask), {}, {}, {}};
    if (!emit(item)) return;
  }
}

// Random wing-1 graph: a Fisher-Yates order plus a random non-crossing arc
// subset; outerplanar by construction, order emitted as side data.
inline CorpusItem random_wing1(int n, double density, uint64_t seed, long index = 0) {
  SplitMix64 rng(seed + 0x5bd1e995u * static_cast<uint64_t>(index));
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) arcs.emplace_back(a, b);
  rng.shuffle(arcs);
  std::vector<std::pair<int, int>> chosen;
  for (auto [a, b] : arcs) {
    if (rng.unit() > density) continue;
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
  CorpusItem item{Graph(n, edges), "random_wing1", seed, index, order, {}, {}};
  // order maps positions to vertices
  std::vector<int> line(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) line[static_cast<size_t>(p)] = order[static_cast<size_t>(p)];
  item.wing_order = line;
  return item;
}

// Stacked triangulation: grow from a triangle by splitting random faces;
// maximal planar with 3n-6 edges, the outer face stays {0,1,2}.
inline CorpusItem maximal_planar(int n, uint64_t seed, long index = 0) {
  if (n < 3) throw std::invalid_argument("maximal_planar: need n >= 3");
  SplitMix64 rng(seed + 0x9e3779b9u * static_cast<uint64_t>(index));
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};  // internal faces only
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < n; ++v) {
    size_t f = static_cast<size_t>(rng.below(faces.size()));
    auto [a, b, c] = faces[f];
    faces.erase(faces.begin() + static_cast<long>(f));
    faces.push_back({a, b, v});
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
  }
  CorpusItem item{Graph(n, edges), "maximal_planar", seed, index, {}, std::vector<int>{0, 1, 2}, {}};
  return item;
}

// Random labeled graph with edge probability `p` (for chi-targeted corpora).
inline Graph random_graph(int n, double p, SplitMix64& rng) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) e.emplace_back(u, v);
  return Graph(n, e);
}

// ---------------------------------------------------------------------------
// Random rule-conformant constraint systems over a wing embedding (p3a2):
// rejected and redrawn until validate_system accepts.

inline ConstraintSystem random_wing_system(const WingEmbedding& w, uint64_t seed, int max_tries = 64) {
  auto info = outer_vertices(w);
  const auto& u = info.outer;
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    ConstraintSystem cs;
    cs.mode = ConstraintSystem::Mode::p3a2;
    // random cluster decomposition of the outer series
    size_t pos = 0;
    bool prev_nonempty = false;
    while (pos < u.size()) {
      if (prev_nonempty && rng.below(5) == 0) cs.clusters.push_back(Cluster{{}});  // occasional empty cluster
      size_t len = 1 + rng.below(3);
      bool overlap = prev_nonempty && rng.below(2) == 0 && pos > 0;
      size_t start = overlap ? pos - 1 : pos;
      len = std::min(len, u.size() - start);
      Cluster c;
      for (size_t i = 0; i < len; ++i) c.vertices.push_back(u[start + i]);
      cs.clusters.push_back(c);
      pos = start + len;
      prev_nonempty = len > 0;
    }
    if (cs.clusters.empty()) cs.clusters.push_back(Cluster{{}});
    const int nc = static_cast<int>(cs.clusters.size());
    // neighbor relations
    for (int i = 0; i + 1 < nc; ++i) {
      uint64_t roll = rng.below(4);
      if (roll == 0) cs.relations.emplace_back(i, i + 1, Rel::eq);
      if (roll == 1) cs.relations.emplace_back(i, i + 1, Rel::neq);
    }
    // divisions: contiguous runs; any two clusters sharing a vertex must sit
    // in a common division, so cut only where allowed (or overlap by one)
    auto share_vertex = [&](int a, int b) {
      for (const auto& [i, j, r] : cs.relations)
        if (r == Rel::eq && ((i == a && j == b) || (i == b && j == a))) return true;  // shared gamma
      for (int x : cs.clusters[static_cast<size_t>(a)].vertices)
        for (int y : cs.clusters[static_cast<size_t>(b)].vertices)
          if (x == y) return true;
      return false;
    };
    std::vector<int> current{0};
    for (int c = 1; c < nc; ++c) {
      bool cut = rng.below(3) == 0;
      if (cut && share_vertex(c - 1, c) && current.size() >= 2) {
        cs.divisions.push_back(current);
        current = {c - 1, c};  // overlap on the junction cluster
      } else if (cut && !share_vertex(c - 1, c)) {
        cs.divisions.push_back(current);
        current = {c};
      } else {
        current.push_back(c);
      }
    }
    cs.divisions.push_back(current);
    auto trace = derived_trace(w, cs);
    if (validate_system(w.graph, trace, cs).empty()) return cs;
  }
  // the trivial system is always valid: one cluster over everything
  ConstraintSystem cs;
  cs.mode = ConstraintSystem::Mode::p3a2;
  Cluster all;
  all.vertices = u;
  cs.clusters.push_back(all);
  cs.divisions.push_back({0});
  return cs;
}

}  // namespace minorlab
