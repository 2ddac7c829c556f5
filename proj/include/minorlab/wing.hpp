// Wing-1 (one-page) embeddings: recognition, the peel-and-prepend drawing
// construction, perimeter traces in both senses, vertex-related sets, and
// low-degree witnesses (P4, plus P1's walk-style traces).
#pragma once

#include <functional>
#include <optional>

#include "minorlab/budget.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/minors.hpp"
#include "minorlab/oracle.hpp"

namespace minorlab {

struct WingEmbedding {
  std::vector<int> order;  // order[i] = vertex at line position i
  Graph graph;
};

struct OuterVertexInfo {
  std::vector<int> outer;  // in line order
  VertexSet inner;
};

// True iff no two arcs interleave when all edges are drawn on one side.
inline bool is_wing1(const std::vector<int>& order, const Graph& g) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("is_wing1: order is not a permutation");
  std::vector<int> pos(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("is_wing1: order is not a permutation");
    pos[static_cast<size_t>(v)] = i;
  }
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : g.edges()) {
    int a = pos[static_cast<size_t>(u)], b = pos[static_cast<size_t>(v)];
    arcs.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      auto [a, b] = arcs[i];
      auto [c, d] = arcs[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  return true;
}

inline OuterVertexInfo outer_vertices(const WingEmbedding& w) {
  const int n = w.graph.vertex_count();
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(w.order[static_cast<size_t>(i)])] = i;
  std::vector<char> covered(static_cast<size_t>(n), 0);
  for (auto [u, v] : w.graph.edges()) {
    int a = pos[static_cast<size_t>(u)], b = pos[static_cast<size_t>(v)];
    for (int p = std::min(a, b) + 1; p < std::max(a, b); ++p) covered[static_cast<size_t>(p)] = 1;
  }
  OuterVertexInfo info;
  for (int p = 0; p < n; ++p) {
    int v = w.order[static_cast<size_t>(p)];
    if (covered[static_cast<size_t>(p)])
      info.inner.push_back(v);
    else
      info.outer.push_back(v);
  }
  std::sort(info.inner.begin(), info.inner.end());
  return info;
}

// ---------------------------------------------------------------------------
// Perimeter traces.

struct Trace {
  enum class Kind { outerplanar_set, planar_walk };
  Kind kind = Kind::outerplanar_set;
  std::vector<int> walk;  // set order for outerplanar kind; closed walk (end implied) otherwise
};

// b-d connectivity in g minus the flagged vertices.
inline bool connected_pair_without(const Graph& g, int b, int d, const std::vector<char>& removed) {
  if (removed[static_cast<size_t>(b)] || removed[static_cast<size_t>(d)]) return false;
  std::vector<int> stack{b};
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  seen[static_cast<size_t>(b)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == d) return true;
    for (int w : g.neighbors(v))
      if (!seen[static_cast<size_t>(w)] && !removed[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

// Outerplanar-set check: no K3 minor on the trace and no K2,2 minor with a
// whole side inside it.  Planar-walk check: the crossing-path condition of
// P1's definition, with wrap edges assumed between consecutive walk vertices.
inline SearchOutcome<bool> trace_check(const Graph& g, const Trace& t,
                                       const SearchBudget& budget = SearchBudget()) {
  if (t.kind == Trace::Kind::outerplanar_set) {
    VertexSet u(t.walk.begin(), t.walk.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (static_cast<int>(u.size()) >= 3) {
      auto k3 = kx_minor_on(g, u, 3, budget);
      if (k3.status == SearchStatus::unknown) return SearchOutcome<bool>::unknown();
      if (k3.found()) return SearchOutcome<bool>::found_with(false);
    }
    if (static_cast<int>(u.size()) >= 2 && g.vertex_count() >= 4) {
      auto k22 = bipartite_minor_on(g, u, {}, 2, 2, budget);  // symmetric in the two sides
      if (k22.status == SearchStatus::unknown) return SearchOutcome<bool>::unknown();
      if (k22.found()) return SearchOutcome<bool>::found_with(false);
    }
    return SearchOutcome<bool>::found_with(true);
  }

  // planar-walk kind
  const auto& walk = t.walk;
  const int len = static_cast<int>(walk.size());
  if (len <= 3) return SearchOutcome<bool>::found_with(true);
  auto edges = g.edges();
  for (int y = 0; y < len; ++y) {
    int a = walk[static_cast<size_t>(y)], b = walk[static_cast<size_t>((y + 1) % len)];
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  Graph aug(g.vertex_count(), edges);
  minorlab::detail::BudgetMeter meter(budget);

  // violated iff some chord pair admits vertex-disjoint paths
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j)
      for (int k = j + 1; k < len; ++k)
        for (int l = k + 1; l < len; ++l) {
          int a = walk[static_cast<size_t>(i)], b = walk[static_cast<size_t>(j)];
          int c = walk[static_cast<size_t>(k)], d = walk[static_cast<size_t>(l)];
          if (a == c || a == d || b == c || b == d || a == b || c == d) continue;
          // enumerate simple a-c paths; if b-d stays connected without one,
          // the required crossing fails
          bool disjoint_found = false;
          std::vector<int> path{a};
          std::vector<char> on_path(static_cast<size_t>(aug.vertex_count()), 0);
          on_path[static_cast<size_t>(a)] = 1;
          std::function<bool(int)> dfs = [&](int v) -> bool {
            if (!meter.tick()) return false;
            if (v == c) {
              if (connected_pair_without(aug, b, d, on_path)) {
                disjoint_found = true;
                return false;
              }
              return true;
            }
            for (int wv : aug.neighbors(v)) {
              if (on_path[static_cast<size_t>(wv)]) continue;
              if (wv == b || wv == d) continue;  // paths containing b or d intersect trivially
              on_path[static_cast<size_t>(wv)] = 1;
              path.push_back(wv);
              bool keep = dfs(wv);
              path.pop_back();
              on_path[static_cast<size_t>(wv)] = 0;
              if (!keep) return false;
            }
            return true;
          };
          dfs(a);
          if (meter.exhausted()) return SearchOutcome<bool>::unknown();
          if (disjoint_found) return SearchOutcome<bool>::found_with(false);
        }
  return SearchOutcome<bool>::found_with(true);
}

namespace detail_w {

// Admissible starting pair per P4's bridge-vertex structure, smallest pair
// first: an adjacent pair of non-cut vertices that is no cut set, or a pair
// joined by a non-edge path whose interior separates them.
inline std::optional<std::vector<int>> initial_trace(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<int>{0};
  std::vector<char> cut(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) cut[static_cast<size_t>(v)] = is_cut_vertex(g, v);
  // a pair {a,b} of the candidate carries a K2,2 minor iff two disjoint
  // connected sets each attach to both: either two components of g-{a,b}
  // do, or one such component holds two disjoint a-b connectors
  auto pair_k22 = [&](int a, int b) {
    std::vector<char> rem(static_cast<size_t>(n), 0);
    rem[static_cast<size_t>(a)] = rem[static_cast<size_t>(b)] = 1;
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
      if (rem[static_cast<size_t>(s)] || comp[static_cast<size_t>(s)] != -1) continue;
      std::vector<int> stack{s};
      comp[static_cast<size_t>(s)] = ncomp;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w2 : g.neighbors(v))
          if (!rem[static_cast<size_t>(w2)] && comp[static_cast<size_t>(w2)] == -1) {
            comp[static_cast<size_t>(w2)] = ncomp;
            stack.push_back(w2);
          }
      }
      ++ncomp;
    }
    std::vector<char> touches_a(static_cast<size_t>(ncomp), 0), touches_b(static_cast<size_t>(ncomp), 0);
    for (int w2 : g.neighbors(a))
      if (!rem[static_cast<size_t>(w2)]) touches_a[static_cast<size_t>(comp[static_cast<size_t>(w2)])] = 1;
    for (int w2 : g.neighbors(b))
      if (!rem[static_cast<size_t>(w2)]) touches_b[static_cast<size_t>(comp[static_cast<size_t>(w2)])] = 1;
    int both = 0, the_comp = -1;
    for (int c = 0; c < ncomp; ++c)
      if (touches_a[static_cast<size_t>(c)] && touches_b[static_cast<size_t>(c)]) {
        ++both;
        the_comp = c;
      }
    if (both >= 2) return true;
    if (both == 0) return false;
    // two vertex-disjoint a-b paths through the one attached component
    VertexSet keep{std::min(a, b), std::max(a, b)};
    for (int v = 0; v < n; ++v)
      if (!rem[static_cast<size_t>(v)] && comp[static_cast<size_t>(v)] == the_comp) keep.push_back(v);
    std::sort(keep.begin(), keep.end());
    auto sub = induced_subgraph(g, keep);
    int la = sub.relabel[static_cast<size_t>(a)], lb = sub.relabel[static_cast<size_t>(b)];
    // drop a direct a-b edge: paths must run through the component
    std::vector<std::pair<int, int>> es;
    for (auto [x, y] : sub.graph.edges())
      if (!((x == la && y == lb) || (x == lb && y == la))) es.emplace_back(x, y);
    Graph h(sub.graph.vertex_count(), es);
    return minorlab::detail::max_vertex_disjoint_paths(h, la, lb) >= 2;
  };
  auto no_pair_k22 = [&](const std::vector<int>& u) {
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = i + 1; j < u.size(); ++j)
        if (pair_k22(u[i], u[j])) return false;
    return true;
  };
  for (int u1 = 0; u1 < n; ++u1) {
    for (int u2 = u1 + 1; u2 < n; ++u2) {
      if (g.has_edge(u1, u2) && !cut[static_cast<size_t>(u1)] && !cut[static_cast<size_t>(u2)] &&
          !separates(g, {u1, u2}) && no_pair_k22({u1, u2}))
        return std::vector<int>{u1, u2};
      // separating vertices lie on every u1-u2 path; a path inside them plus
      // the endpoints has exactly the bridge vertices as its interior
      VertexSet seps;
      for (int w = 0; w < n; ++w) {
        if (w == u1 || w == u2) continue;
        std::vector<char> rem(static_cast<size_t>(n), 0);
        rem[static_cast<size_t>(w)] = 1;
        if (!connected_pair_without(g, u1, u2, rem)) seps.push_back(w);
      }
      if (seps.empty()) continue;
      // BFS from u1 to u2 within {u1,u2} + separators
      std::vector<int> prev(static_cast<size_t>(n), -2);
      std::vector<int> queue{u1};
      prev[static_cast<size_t>(u1)] = -1;
      for (size_t qi = 0; qi < queue.size() && prev[static_cast<size_t>(u2)] == -2; ++qi) {
        int v = queue[static_cast<size_t>(qi)];
        for (int w : g.neighbors(v)) {
          if (prev[static_cast<size_t>(w)] != -2) continue;
          if (w != u2 && !std::binary_search(seps.begin(), seps.end(), w)) continue;
          prev[static_cast<size_t>(w)] = v;
          queue.push_back(w);
        }
      }
      if (prev[static_cast<size_t>(u2)] == -2) continue;
      std::vector<int> path;
      for (int v = u2; v != -1; v = prev[static_cast<size_t>(v)]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      if (path.size() >= 3 && no_pair_k22(path)) return path;
    }
  }
  return std::nullopt;
}

// Peel-and-prepend construction on a mutable alive-set.  Returns the line
// order, or nullopt when the trace bookkeeping cannot continue (not
// outerplanar, or the trace was not a perimeter trace).
struct Peeler {
  const Graph& g;
  std::vector<char> alive;

  explicit Peeler(const Graph& graph) : g(graph), alive(static_cast<size_t>(graph.vertex_count()), 1) {}

  VertexSet live_neighbors(int v) const {
    VertexSet out;
    for (int w : g.neighbors(v))
      if (alive[static_cast<size_t>(w)]) out.push_back(w);
    return out;
  }

  bool separates_pair(int w, int from, int to) const {
    // connectivity among alive vertices minus w
    if (w == from || w == to) return true;
    std::vector<int> stack{from};
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    seen[static_cast<size_t>(from)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == to) return false;
      for (int x : g.neighbors(v))
        if (alive[static_cast<size_t>(x)] && x != w && !seen[static_cast<size_t>(x)]) {
          seen[static_cast<size_t>(x)] = 1;
          stack.push_back(x);
        }
    }
    return true;
  }

  std::vector<VertexSet> alive_components() const {
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
      if (!alive[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
      VertexSet cur;
      std::vector<int> stack{s};
      seen[static_cast<size_t>(s)] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        cur.push_back(v);
        for (int w : g.neighbors(v))
          if (alive[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            stack.push_back(w);
          }
      }
      std::sort(cur.begin(), cur.end());
      comps.push_back(std::move(cur));
    }
    return comps;
  }

  // trace: ordered, all alive, nonempty; alive set = one connected component
  std::optional<std::vector<int>> run(std::vector<int> trace, int alive_count) {
    std::vector<int> order;
    while (true) {
      if (alive_count == 1) {
        for (int v = 0; v < g.vertex_count(); ++v)
          if (alive[static_cast<size_t>(v)]) order.push_back(v);
        return order;
      }
      if (trace.empty()) return std::nullopt;
      int u1 = trace.front();
      trace.erase(trace.begin());
      VertexSet nbrs = live_neighbors(u1);
      alive[static_cast<size_t>(u1)] = 0;
      --alive_count;
      VertexSet qs;
      for (int w : nbrs)
        if (std::find(trace.begin(), trace.end(), w) == trace.end()) qs.push_back(w);

      auto comps = alive_components();
      if (comps.size() == 1) {
        auto ordered_qs = order_qs(qs, trace.empty() ? -1 : trace.front());
        if (!ordered_qs) return std::nullopt;
        std::vector<int> next_trace = std::move(*ordered_qs);
        next_trace.insert(next_trace.end(), trace.begin(), trace.end());
        order.push_back(u1);
        trace = std::move(next_trace);
        continue;
      }

      // the peel split the graph: embed each component on its own stretch of
      // the line.  Pockets hanging off u1 alone come first; components that
      // carry the old trace onward go last, in old-trace order, so arcs into
      // the tail reach over the pockets without crossing.
      order.push_back(u1);
      struct Piece {
        std::pair<int, int> key;
        std::vector<int> order;
      };
      std::vector<Piece> pieces;
      for (const auto& comp : comps) {
        VertexSet cqs;
        for (int q : qs)
          if (std::binary_search(comp.begin(), comp.end(), q)) cqs.push_back(q);
        std::vector<int> ctail;
        int first_tail_pos = -1;
        for (size_t ti = 0; ti < trace.size(); ++ti)
          if (std::binary_search(comp.begin(), comp.end(), trace[ti])) {
            if (ctail.empty()) first_tail_pos = static_cast<int>(ti);
            ctail.push_back(trace[ti]);
          }
        if (cqs.empty() && ctail.empty()) return std::nullopt;  // trace cannot reach this side
        int anchor = ctail.empty() ? -1 : ctail.front();
        // restrict alive to this component for the separation ordering
        std::vector<char> saved = alive;
        for (int v = 0; v < g.vertex_count(); ++v)
          if (alive[static_cast<size_t>(v)] && !std::binary_search(comp.begin(), comp.end(), v))
            alive[static_cast<size_t>(v)] = 0;
        auto oq = order_qs(cqs, anchor);
        alive = std::move(saved);
        if (!oq) return std::nullopt;
        std::vector<int> sub_trace = std::move(*oq);
        sub_trace.insert(sub_trace.end(), ctail.begin(), ctail.end());

        Peeler sub(g);
        sub.alive.assign(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : comp) sub.alive[static_cast<size_t>(v)] = 1;
        auto sub_order = sub.run(sub_trace, static_cast<int>(comp.size()));
        if (!sub_order) return std::nullopt;
        std::pair<int, int> key = ctail.empty() ? std::pair(0, comp.front()) : std::pair(1, first_tail_pos);
        pieces.push_back({key, std::move(*sub_order)});
      }
      std::sort(pieces.begin(), pieces.end(),
                [](const Piece& a, const Piece& b) { return a.key < b.key; });
      for (auto& p : pieces) order.insert(order.end(), p.order.begin(), p.order.end());
      return order;
    }
  }

  // order newly exposed vertices along the boundary: they sit on a path of
  // the separation structure, farthest from the anchor first.  The counts
  // must be pairwise distinct or the vertices are not on one boundary path.
  std::optional<std::vector<int>> ordered_by_separation(const VertexSet& qs, int t) {
    std::vector<std::pair<int, int>> scored;  // (-separators, id)
    for (int q : qs) {
      if (q == t) continue;
      int score = 0;
      for (int other : qs)
        if (other != q && other != t && separates_pair(other, q, t)) ++score;
      scored.emplace_back(-score, q);
    }
    for (size_t i = 0; i + 1 < scored.size(); ++i)
      for (size_t j = i + 1; j < scored.size(); ++j)
        if (scored[i].first == scored[j].first) return std::nullopt;
    std::sort(scored.begin(), scored.end());
    std::vector<int> out;
    for (auto [neg, q] : scored) out.push_back(q);
    return out;
  }

  std::optional<std::vector<int>> order_qs(const VertexSet& qs, int anchor) {
    if (qs.size() <= 1) return std::vector<int>(qs.begin(), qs.end());
    if (anchor != -1) return ordered_by_separation(qs, anchor);
    // anchorless pocket: some member is the far endpoint; try each
    for (int t : qs) {
      auto got = ordered_by_separation(qs, t);
      if (got) {
        got->push_back(t);
        return got;
      }
    }
    return std::nullopt;
  }
};

}  // namespace detail_w

// Lexicographically chosen perimeter trace per the bridge-vertex structure.
inline Trace find_perimeter_trace(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("find_perimeter_trace: graph must be connected");
  auto mem = oracle::class_membership(g, oracle::GraphClass::outerplanar);
  if (!mem.decided() || !mem.member)
    throw std::invalid_argument("find_perimeter_trace: graph is not outerplanar");
  auto t = detail_w::initial_trace(g);
  if (!t) throw std::runtime_error("find_perimeter_trace: no admissible pair");
  return Trace{Trace::Kind::outerplanar_set, *t};
}

struct BuildWingResult {
  std::optional<WingEmbedding> embedding;
  std::optional<MinorWitness> forbidden;
  std::string forbidden_name;

  bool ok() const { return embedding.has_value(); }
};

// Draws g as a wing-1 graph by the peel-and-prepend induction; on failure the
// forbidden-minor oracle supplies a K4 or K2,3 witness.
inline BuildWingResult build_wing1(const Graph& g) {
  BuildWingResult out;
  const int n = g.vertex_count();
  std::vector<int> order;
  bool built = true;
  for (const auto& comp : components(g)) {
    detail_w::Peeler peeler(g);
    peeler.alive.assign(static_cast<size_t>(n), 0);
    for (int v : comp) peeler.alive[static_cast<size_t>(v)] = 1;
    // trace selection works on the component in isolation
    auto ind = induced_subgraph(g, comp);
    auto local = detail_w::initial_trace(ind.graph);
    if (!local) {
      built = false;
      break;
    }
    std::vector<int> trace;
    for (int lv : *local) trace.push_back(comp[static_cast<size_t>(lv)]);
    auto sub = peeler.run(trace, static_cast<int>(comp.size()));
    if (!sub) {
      built = false;
      break;
    }
    order.insert(order.end(), sub->begin(), sub->end());
  }
  if (built && n == 0) {
    out.embedding = WingEmbedding{{}, g};
    return out;
  }
  if (built && is_wing1(order, g)) {
    out.embedding = WingEmbedding{order, g};
    return out;
  }
  auto mem = oracle::class_membership(g, oracle::GraphClass::outerplanar);
  if (!mem.decided()) throw budget_error("build_wing1: oracle budget exhausted on failure analysis");
  if (mem.member)
    throw std::logic_error("build_wing1: construction failed on an outerplanar graph");
  out.forbidden = mem.forbidden;
  out.forbidden_name = mem.forbidden_name;
  return out;
}

// ---------------------------------------------------------------------------
// Vertex-related sets and the low-degree witness.

struct VertexRelatedSet {
  VertexSet members;
};

// All maximal sets whose between-vertices have no edges leaving the span.
inline std::vector<VertexRelatedSet> vertex_related_sets(const WingEmbedding& w) {
  const int n = w.graph.vertex_count();
  if (n == 0) return {};
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(w.order[static_cast<size_t>(i)])] = i;
  std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) lo[static_cast<size_t>(p)] = hi[static_cast<size_t>(p)] = p;
  for (auto [u, v] : w.graph.edges()) {
    int a = pos[static_cast<size_t>(u)], b = pos[static_cast<size_t>(v)];
    if (a > b) std::swap(a, b);
    lo[static_cast<size_t>(b)] = std::min(lo[static_cast<size_t>(b)], a);
    hi[static_cast<size_t>(a)] = std::max(hi[static_cast<size_t>(a)], b);
  }
  // gap_ok(a,b): every position strictly between reaches only inside [a,b]
  auto gap_ok = [&](int a, int b) {
    for (int q = a + 1; q < b; ++q)
      if (lo[static_cast<size_t>(q)] < a || hi[static_cast<size_t>(q)] > b) return false;
    return true;
  };

  // enumerate right-maximal related chains of positions; appending nxt turns
  // the previous tail internal, so its reach must fit its two neighbors
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void()> extend = [&]() {
    const int last = cur.back();
    bool extended = false;
    for (int nxt = last + 1; nxt < n; ++nxt) {
      if (!gap_ok(last, nxt)) continue;
      if (cur.size() >= 2) {
        int prev = cur[cur.size() - 2];
        if (lo[static_cast<size_t>(last)] < prev || hi[static_cast<size_t>(last)] > nxt) continue;
      }
      cur.push_back(nxt);
      extend();
      cur.pop_back();
      extended = true;
    }
    if (!extended) chains.push_back(cur);
  };
  for (int s = 0; s < n; ++s) {
    cur = {s};
    extend();
  }
  // dedupe and keep set-maximal chains
  std::sort(chains.begin(), chains.end());
  chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
  std::vector<VertexRelatedSet> out;
  for (size_t i = 0; i < chains.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < chains.size() && maximal; ++j)
      if (i != j && chains[j].size() > chains[i].size() &&
          std::includes(chains[j].begin(), chains[j].end(), chains[i].begin(), chains[i].end()))
        maximal = false;
    if (!maximal) continue;
    VertexRelatedSet r;
    for (int p : chains[i]) r.members.push_back(w.order[static_cast<size_t>(p)]);
    std::sort(r.members.begin(), r.members.end());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexRelatedSet& a, const VertexRelatedSet& b) { return a.members < b.members; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const VertexRelatedSet& a, const VertexRelatedSet& b) { return a.members == b.members; }),
            out.end());
  return out;
}

// Locates a degree <= 2 vertex by the interval-descent argument.
inline int find_low_degree(const WingEmbedding& w) {
  const int n = w.graph.vertex_count();
  if (n == 0) throw std::invalid_argument("find_low_degree: empty embedding");
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(w.order[static_cast<size_t>(i)])] = i;
  auto pedge = [&](int a, int b) {
    return w.graph.has_edge(w.order[static_cast<size_t>(a)], w.order[static_cast<size_t>(b)]);
  };
  // find a long arc to descend into
  int ai = -1, aj = -1;
  for (auto [u, v] : w.graph.edges()) {
    int a = pos[static_cast<size_t>(u)], b = pos[static_cast<size_t>(v)];
    if (a > b) std::swap(a, b);
    if (b > a + 1 && (ai == -1 || std::pair(a, b) < std::pair(ai, aj))) {
      ai = a;
      aj = b;
    }
  }
  if (ai == -1) {
    // only consecutive arcs: every vertex already has degree <= 2
    int best = 0;
    for (int v = 1; v < n; ++v)
      if (w.graph.degree(v) < w.graph.degree(best)) best = v;
    return best;
  }
  int i = ai, j = aj;
  while (true) {
    bool moved = false;
    for (int p = i + 2; p < j && !moved; ++p)
      if (pedge(i, p)) {
        j = p;
        moved = true;
      }
    if (moved) continue;
    for (int p = j - 2; p > i && !moved; --p)
      if (pedge(p, j)) {
        i = p;
        moved = true;
      }
    if (moved) continue;
    int v = w.order[static_cast<size_t>(i + 1)];
    if (w.graph.degree(v) <= 2) return v;
    for (int p = i + 3; p < j && !moved; ++p)
      if (pedge(i + 1, p)) {
        i = i + 1;
        j = p;
        moved = true;
      }
    if (!moved) throw std::logic_error("find_low_degree: descent stuck on a non-wing order");
  }
}

}  // namespace minorlab
