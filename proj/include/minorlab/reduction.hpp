// The reduction pipeline parametric in k: consistent-cut-set reduction,
// minimum-degree forcing, the constructive K4 witness for chromatic-4
// graphs, and the degree-5 pentagon trichotomy.
#pragma once

#include <variant>

#include "minorlab/coloring.hpp"
#include "minorlab/cycles.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/minors.hpp"
#include "minorlab/oracle.hpp"

namespace minorlab {

struct ReductionOutcome {
  enum class Kind { reduced, clique_minor, irreducible };
  Kind kind = Kind::irreducible;
  // reduced: the smaller graph plus the action trail that produced it (each
  // action is expressed in the coordinates of the graph it was applied to)
  Graph graph;
  std::vector<MinorAction> actions;
  // clique_minor
  MinorWitness witness;
  // irreducible: verified facts
  int min_degree = 0;
  int connectivity = 0;
};

namespace detail_r {

// Replays actions from `start`, returning per-vertex provenance sets (bit
// masks over the original vertices) for the final graph.
inline std::vector<uint32_t> provenance(const Graph& start, const std::vector<MinorAction>& actions) {
  std::vector<uint32_t> prov(static_cast<size_t>(start.vertex_count()));
  for (int v = 0; v < start.vertex_count(); ++v) prov[static_cast<size_t>(v)] = uint32_t{1} << v;
  Graph cur = start;
  for (const auto& a : actions) {
    auto res = apply_minor_action(cur, a);
    std::vector<uint32_t> next(static_cast<size_t>(res.graph.vertex_count()), 0);
    for (int v = 0; v < cur.vertex_count(); ++v)
      if (res.relabel[static_cast<size_t>(v)] != -1)
        next[static_cast<size_t>(res.relabel[static_cast<size_t>(v)])] |= prov[static_cast<size_t>(v)];
    prov = std::move(next);
    cur = res.graph;
  }
  return prov;
}

inline MinorWitness lift_witness(const MinorWitness& w, const std::vector<uint32_t>& prov) {
  MinorWitness out;
  out.model_edges = w.model_edges;
  for (const auto& bs : w.branch_sets) {
    uint32_t mask = 0;
    for (int v : bs) mask |= prov[static_cast<size_t>(v)];
    out.branch_sets.push_back(mask_to_set(mask));
  }
  return out;
}

// Two internally disjoint paths s -> t (ends included), exhaustive.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> two_disjoint_paths(const Graph& g,
                                                                                       int s, int t) {
  std::optional<std::pair<std::vector<int>, std::vector<int>>> hit;
  std::vector<int> path{s};
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  used[static_cast<size_t>(s)] = 1;
  std::function<bool(int)> dfs = [&](int v) -> bool {
    if (v == t) {
      // BFS for a second path avoiding the first's interior
      std::vector<int> prev(static_cast<size_t>(g.vertex_count()), -2);
      std::vector<int> queue{s};
      prev[static_cast<size_t>(s)] = -1;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[static_cast<size_t>(qi)];
        for (int y : g.neighbors(x)) {
          if (prev[static_cast<size_t>(y)] != -2) continue;
          if (y != t && used[static_cast<size_t>(y)] && y != s) continue;
          if (y == t && x == s && path.size() == 2) continue;  // do not reuse the edge path twice
          prev[static_cast<size_t>(y)] = x;
          queue.push_back(y);
        }
      }
      if (prev[static_cast<size_t>(t)] != -2) {
        std::vector<int> second;
        for (int x = t; x != -1; x = prev[static_cast<size_t>(x)]) second.push_back(x);
        std::reverse(second.begin(), second.end());
        // disjointness of interiors
        bool ok = true;
        for (size_t a = 1; a + 1 < second.size() && ok; ++a)
          if (used[static_cast<size_t>(second[a])]) ok = false;
        if (ok && !(second.size() == 2 && path.size() == 2)) {
          hit = {path, second};
          return false;
        }
      }
      return true;
    }
    for (int w : g.neighbors(v)) {
      if (used[static_cast<size_t>(w)] && w != t) continue;
      if (w == t) {
        path.push_back(t);
        bool keep = dfs(t);
        path.pop_back();
        if (!keep) return false;
        continue;
      }
      used[static_cast<size_t>(w)] = 1;
      path.push_back(w);
      bool keep = dfs(w);
      path.pop_back();
      used[static_cast<size_t>(w)] = 0;
      if (!keep) return false;
    }
    return true;
  };
  dfs(s);
  return hit;
}

// Fan: `count` internally disjoint paths from s into `targets`, each ending
// at a distinct target and meeting targets only at its end.
inline std::optional<std::vector<std::vector<int>>> disjoint_fan(const Graph& g, int s,
                                                                 const VertexSet& targets, int count) {
  std::vector<std::vector<int>> got;
  std::vector<char> hit_target(static_cast<size_t>(g.vertex_count()), 0);
  std::function<bool()> place = [&]() -> bool {
    if (static_cast<int>(got.size()) == count) return true;
    // each level owns its walk state; accepted interiors stay blocked
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    used[static_cast<size_t>(s)] = 1;
    for (const auto& p : got)
      for (size_t i = 1; i + 1 < p.size(); ++i) used[static_cast<size_t>(p[i])] = 1;
    std::vector<int> path{s};
    std::function<bool(int)> walk = [&](int v) -> bool {
      for (int w : g.neighbors(v)) {
        if (std::binary_search(targets.begin(), targets.end(), w)) {
          if (hit_target[static_cast<size_t>(w)]) continue;
          path.push_back(w);
          hit_target[static_cast<size_t>(w)] = 1;
          got.push_back(path);
          if (place()) return true;
          got.pop_back();
          hit_target[static_cast<size_t>(w)] = 0;
          path.pop_back();
          continue;
        }
        if (used[static_cast<size_t>(w)]) continue;
        used[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        bool done = walk(w);
        path.pop_back();
        used[static_cast<size_t>(w)] = 0;
        if (done) return true;
      }
      return false;
    };
    return walk(s);
  };
  if (!place()) return std::nullopt;
  return got;
}

// K3 minor on {a,b,c} in a 2-connected graph via the disjoint-path argument.
inline MinorWitness k3_minor_via_paths(const Graph& g, int a, int b, int c) {
  auto cyc = two_disjoint_paths(g, a, b);
  if (!cyc) throw std::logic_error("k3_minor_via_paths: no cycle through a,b in a 2-connected graph");
  std::vector<int> C = cyc->first;  // a .. b
  for (size_t i = cyc->second.size() - 2; i >= 1; --i) C.push_back(cyc->second[i]);
  const int L = static_cast<int>(C.size());
  auto idx = [&](int v) {
    auto it = std::find(C.begin(), C.end(), v);
    return it == C.end() ? -1 : static_cast<int>(it - C.begin());
  };
  auto arc = [&](int from, int to) {  // positions from..to walking forward, inclusive
    VertexSet out;
    for (int p = from;; p = (p + 1) % L) {
      out.push_back(C[static_cast<size_t>(p)]);
      if (p == to) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto pred = [&](int p) { return (p - 1 + L) % L; };

  MinorWitness w;
  w.model_edges = {{0, 1}, {0, 2}, {1, 2}};
  const int pa = idx(a), pb = idx(b), pc0 = idx(c);

  if (pc0 != -1) {
    // all three on the cycle: split it into three consecutive arcs
    std::vector<std::pair<int, int>> marks;  // (position, which)
    for (int off = 0; off < L; ++off) {
      int p = (pa + off) % L;
      if (p == pa) marks.emplace_back(p, 0);
      if (p == pb) marks.emplace_back(p, 1);
      if (p == pc0) marks.emplace_back(p, 2);
    }
    w.branch_sets.resize(3);
    for (int t = 0; t < 3; ++t) {
      int from = marks[static_cast<size_t>(t)].first;
      int to = pred(marks[static_cast<size_t>((t + 1) % 3)].first);
      w.branch_sets[static_cast<size_t>(marks[static_cast<size_t>(t)].second)] = arc(from, to);
    }
    return w;
  }

  VertexSet targets(C.begin(), C.end());
  std::sort(targets.begin(), targets.end());
  auto fan = disjoint_fan(g, c, targets, 2);
  if (!fan) throw std::logic_error("k3_minor_via_paths: no fan from c to the cycle");
  int x = (*fan)[0].back(), y = (*fan)[1].back();
  int px = idx(x), py = idx(y);
  VertexSet Bc{c};
  for (const auto& p : *fan)
    for (size_t i = 1; i + 1 < p.size(); ++i) Bc.push_back(p[i]);

  auto in_closed = [&](int p, int lo, int hi) {
    for (int q = lo;; q = (q + 1) % L) {
      if (q == p) return true;
      if (q == hi) return false;
    }
  };
  VertexSet Ba, Bb;
  if (in_closed(pa, px, py) && in_closed(pb, px, py)) {
    // both on the forward x..y arc; split just before the second mark
    int first = pa, second = pb, wa = 0;
    if (!in_closed(pb, pa, py)) {
      std::swap(first, second);
      wa = 1;  // b comes first along the arc
    }
    VertexSet s1 = arc(px, pred(second)), s2 = arc(second, py);
    Ba = wa == 0 ? s1 : s2;
    Bb = wa == 0 ? s2 : s1;
  } else if (in_closed(pa, py, px) && in_closed(pb, py, px)) {
    int first = pa, second = pb, wa = 0;
    if (!in_closed(pb, pa, px)) {
      std::swap(first, second);
      wa = 1;
    }
    VertexSet s1 = arc(py, pred(second)), s2 = arc(second, px);
    Ba = wa == 0 ? s1 : s2;
    Bb = wa == 0 ? s2 : s1;
  } else if (in_closed(pa, px, py)) {
    // a strictly inside x..y, b strictly inside y..x
    Ba = arc(px, pred(py));
    Bb = arc((py + 1) % L, pred(px));
    Bc.push_back(y);
  } else {
    Ba = arc(py, pred(px));
    Bb = arc((px + 1) % L, pred(py));
    Bc.push_back(x);
  }
  std::sort(Bc.begin(), Bc.end());
  w.branch_sets = {Ba, Bb, Bc};
  return w;
}

}  // namespace detail_r

// One reduction step at k: a consistent small cut set or a low-degree vertex
// yields a strictly smaller graph with oracle-checked chromatic number >= k;
// otherwise a K_k clique minor or a certified irreducibility report.
inline ReductionOutcome reduce_step(const Graph& g, int k) {
  if (k != 3 && k != 4) throw std::invalid_argument("reduce_step: k must be 3 or 4 at desk scale");
  if (oracle::chromatic_number(g) != k) throw std::invalid_argument("reduce_step: chromatic number is not k");
  ReductionOutcome out;

  // disconnected: keep a chromatic-k component
  if (!is_connected(g)) {
    for (const auto& comp : components(g)) {
      auto sub = induced_subgraph(g, comp);
      if (oracle::chromatic_number(sub.graph) == k) {
        Graph cur = g;
        std::vector<MinorAction> actions;
        // delete everything outside the component, highest id first
        for (int v = g.vertex_count() - 1; v >= 0; --v)
          if (!std::binary_search(comp.begin(), comp.end(), v)) {
            actions.push_back(MinorAction::del_vertex(v));
            cur = apply_minor_action(cur, actions.back()).graph;
          }
        out.kind = ReductionOutcome::Kind::reduced;
        out.graph = cur;
        out.actions = actions;
        return out;
      }
    }
  }

  // consistent cut sets of size <= k-2, increasing size, lexicographic.
  // A kept side C plus the clique abs_R(W) is a genuine minor: the blocks
  // contract along the other side's realization sets, then what is left of
  // that side is deleted.
  for (const auto& w : find_cut_sets(g, k - 2)) {
    for (const auto& rel : admissive_relations(g, w)) {
      ConsistencyWitness cw;
      auto cons = is_consistent_cut_set(g, w, rel, SearchBudget(), &cw);
      if (cons.status != SearchStatus::found || !*cons.value) continue;
      for (int side = 0; side < 2; ++side) {
        const VertexSet& dropped = side == 0 ? cw.side2 : cw.side1;
        const auto& sets = side == 0 ? cw.sets2 : cw.sets1;
        std::vector<MinorAction> actions;
        Graph cur = g;
        std::vector<int> where(static_cast<size_t>(g.vertex_count()));
        std::iota(where.begin(), where.end(), 0);
        auto apply = [&](const MinorAction& a) {
          actions.push_back(a);
          auto res = apply_minor_action(cur, a);
          cur = res.graph;
          for (int x = 0; x < g.vertex_count(); ++x)
            if (where[static_cast<size_t>(x)] != -1)
              where[static_cast<size_t>(x)] = res.relabel[static_cast<size_t>(where[static_cast<size_t>(x)])];
        };
        // contract each realization set to a point via its spanning tree
        std::set<int> absorbed;
        for (const auto& t : sets) {
          auto ind = induced_subgraph(g, t);
          std::vector<char> seen(t.size(), 0);
          std::vector<int> stack{0};
          seen[0] = 1;
          while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : ind.graph.neighbors(a))
              if (!seen[static_cast<size_t>(b)]) {
                seen[static_cast<size_t>(b)] = 1;
                stack.push_back(b);
                apply(MinorAction::contract(where[static_cast<size_t>(t[static_cast<size_t>(a)])],
                                            where[static_cast<size_t>(t[static_cast<size_t>(b)])]));
              }
          }
          for (int v : t) absorbed.insert(v);
        }
        for (int v = g.vertex_count() - 1; v >= 0; --v)
          if (std::binary_search(dropped.begin(), dropped.end(), v) && !absorbed.count(v))
            apply(MinorAction::del_vertex(where[static_cast<size_t>(v)]));
        if (cur.vertex_count() < g.vertex_count() && oracle::chromatic_number(cur) >= k) {
          out.kind = ReductionOutcome::Kind::reduced;
          out.graph = cur;
          out.actions = actions;
          return out;
        }
      }
    }
  }

  // low-degree forcing
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > k - 1) continue;
    if (g.degree(v) <= k - 2) {
      auto res = apply_minor_action(g, MinorAction::del_vertex(v));
      if (oracle::chromatic_number(res.graph) >= k) {
        out.kind = ReductionOutcome::Kind::reduced;
        out.graph = res.graph;
        out.actions = {MinorAction::del_vertex(v)};
        return out;
      }
      throw std::runtime_error("reduce_step: finding: deleting a low-degree vertex dropped chi");
    }
    // degree exactly k-1
    auto nb = g.neighbors(v);
    bool clique = true;
    int u1 = -1, u2 = -1;
    for (size_t i = 0; i < nb.size() && u1 == -1; ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (!g.has_edge(nb[i], nb[j])) {
          clique = false;
          u1 = nb[i];
          u2 = nb[j];
          break;
        }
    if (clique) {
      out.kind = ReductionOutcome::Kind::clique_minor;
      out.witness.branch_sets.push_back({v});
      for (int x : nb) out.witness.branch_sets.push_back({x});
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) out.witness.model_edges.emplace_back(i, j);
      return out;
    }
    // contract u1 - v - u2 into one vertex; chi stays >= k (oracle-gated)
    auto c1 = apply_minor_action(g, MinorAction::contract(u1, v));
    int m = c1.relabel[static_cast<size_t>(v)];
    auto c2 = apply_minor_action(c1.graph, MinorAction::contract(m, c1.relabel[static_cast<size_t>(u2)]));
    if (oracle::chromatic_number(c2.graph) >= k) {
      out.kind = ReductionOutcome::Kind::reduced;
      out.graph = c2.graph;
      out.actions = {MinorAction::contract(u1, v), MinorAction::contract(m, c1.relabel[static_cast<size_t>(u2)])};
      return out;
    }
    throw std::runtime_error("reduce_step: finding: neighborhood contraction dropped chi");
  }

  out.kind = ReductionOutcome::Kind::irreducible;
  out.min_degree = g.min_degree();
  out.connectivity = vertex_connectivity(g);
  if (out.min_degree < k || out.connectivity < k - 1)
    throw std::logic_error("reduce_step: irreducibility certificate is wrong");
  return out;
}

// Constructive K4 witness for a chromatic-4 graph, the paper's way: reduce
// to a 3-connected core, take a K3 minor on three neighbors of a vertex by
// disjoint paths, then join the vertex.
inline MinorWitness dirac_k4_witness(const Graph& g) {
  if (oracle::chromatic_number(g) != 4) throw std::invalid_argument("dirac_k4_witness: chromatic number is not 4");
  Graph cur = g;
  std::vector<MinorAction> trail;
  while (true) {
    // contractions may push the chromatic number past 4; peel vertices until
    // it is back (deleting any vertex lowers it by at most one)
    while (oracle::chromatic_number(cur) > 4) {
      bool moved = false;
      for (int v = 0; v < cur.vertex_count() && !moved; ++v) {
        auto res = apply_minor_action(cur, MinorAction::del_vertex(v));
        if (oracle::chromatic_number(res.graph) >= 4) {
          trail.push_back(MinorAction::del_vertex(v));
          cur = res.graph;
          moved = true;
        }
      }
      if (!moved) throw std::logic_error("dirac_k4_witness: cannot settle the chromatic number");
    }
    auto step = reduce_step(cur, 4);
    if (step.kind == ReductionOutcome::Kind::reduced) {
      for (const auto& a : step.actions) trail.push_back(a);
      cur = step.graph;
      continue;
    }
    MinorWitness local;
    if (step.kind == ReductionOutcome::Kind::clique_minor) {
      local = step.witness;
    } else {
      // irreducible core: 3-connected, min degree >= 4
      int v = 0;
      auto nb = cur.neighbors(v);
      int a = nb[0], b = nb[1], c = nb[2];
      auto del = apply_minor_action(cur, MinorAction::del_vertex(v));
      auto k3 = detail_r::k3_minor_via_paths(del.graph, del.relabel[static_cast<size_t>(a)],
                                             del.relabel[static_cast<size_t>(b)],
                                             del.relabel[static_cast<size_t>(c)]);
      // map back into cur's ids (deletion only shifts)
      std::vector<int> back(static_cast<size_t>(del.graph.vertex_count()));
      for (int x = 0; x < cur.vertex_count(); ++x)
        if (del.relabel[static_cast<size_t>(x)] != -1) back[static_cast<size_t>(del.relabel[static_cast<size_t>(x)])] = x;
      local.model_edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      local.branch_sets.push_back({v});
      for (const auto& bs : k3.branch_sets) {
        VertexSet mapped;
        for (int x : bs) mapped.push_back(back[static_cast<size_t>(x)]);
        std::sort(mapped.begin(), mapped.end());
        local.branch_sets.push_back(mapped);
      }
      std::string why;
      if (!validate_clique_witness(cur, local, 4, &why))
        throw std::logic_error("dirac_k4_witness: core witness invalid: " + why);
    }
    auto prov = detail_r::provenance(g, trail);
    auto lifted = detail_r::lift_witness(local, prov);
    std::string why;
    if (!validate_clique_witness(g, lifted, 4, &why))
      throw std::logic_error("dirac_k4_witness: lifted witness invalid: " + why);
    return lifted;
  }
}

// Trichotomy at a degree-5 vertex of a 4-connected graph.
struct FiveWheelOutcome {
  enum class Kind { k5_minor, pentagon, reducible };
  Kind kind;
  MinorWitness witness;        // k5_minor
  VertexSet independent_triple;  // reducible
  VertexSet pentagon;            // induced 5-cycle on N(v), in cycle order
};

inline FiveWheelOutcome five_wheel_check(const Graph& g, int v) {
  if (g.degree(v) != 5) throw std::invalid_argument("five_wheel_check: vertex degree is not 5");
  if (vertex_connectivity(g) < 4) throw std::invalid_argument("five_wheel_check: graph is not 4-connected");
  auto nb = g.neighbors(v);
  FiveWheelOutcome out{FiveWheelOutcome::Kind::pentagon, {}, {}, {}};

  // triangle in N(v): three disjoint paths from a fourth neighbor realize K5
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      for (size_t k2 = j + 1; k2 < nb.size(); ++k2)
        if (g.has_edge(nb[i], nb[j]) && g.has_edge(nb[i], nb[k2]) && g.has_edge(nb[j], nb[k2])) {
          VertexSet tri{nb[i], nb[j], nb[k2]};
          int d = -1;
          for (int x : nb)
            if (!std::binary_search(tri.begin(), tri.end(), x)) {
              d = x;
              break;
            }
          auto del = apply_minor_action(g, MinorAction::del_vertex(v));
          VertexSet tri2;
          for (int x : tri) tri2.push_back(del.relabel[static_cast<size_t>(x)]);
          std::sort(tri2.begin(), tri2.end());
          auto fan = detail_r::disjoint_fan(del.graph, del.relabel[static_cast<size_t>(d)], tri2, 3);
          if (!fan) throw std::logic_error("five_wheel_check: no fan in a 3-connected remainder");
          std::vector<int> back(static_cast<size_t>(del.graph.vertex_count()));
          for (int x = 0; x < g.vertex_count(); ++x)
            if (del.relabel[static_cast<size_t>(x)] != -1) back[static_cast<size_t>(del.relabel[static_cast<size_t>(x)])] = x;
          MinorWitness w;
          w.branch_sets.push_back({v});
          w.branch_sets.push_back({d});
          for (const auto& p : *fan) {
            VertexSet bs{back[static_cast<size_t>(p.back())]};
            for (size_t t = 1; t + 1 < p.size(); ++t) bs.push_back(back[static_cast<size_t>(p[t])]);
            std::sort(bs.begin(), bs.end());
            w.branch_sets.push_back(bs);
          }
          for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) w.model_edges.emplace_back(a, b);
          std::string why;
          if (!validate_clique_witness(g, w, 5, &why))
            throw std::logic_error("five_wheel_check: K5 witness invalid: " + why);
          out.kind = FiveWheelOutcome::Kind::k5_minor;
          out.witness = w;
          return out;
        }

  // three independent neighbors: reducible per the corollary's proof
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      for (size_t k2 = j + 1; k2 < nb.size(); ++k2)
        if (!g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k2]) && !g.has_edge(nb[j], nb[k2])) {
          out.kind = FiveWheelOutcome::Kind::reducible;
          out.independent_triple = {nb[i], nb[j], nb[k2]};
          return out;
        }

  // otherwise N(v) must induce a 5-cycle
  auto ind = induced_subgraph(g, nb);
  for (int x = 0; x < 5; ++x)
    if (ind.graph.degree(x) != 2) throw std::logic_error("five_wheel_check: trichotomy gap");
  if (!is_connected(ind.graph)) throw std::logic_error("five_wheel_check: trichotomy gap");
  out.kind = FiveWheelOutcome::Kind::pentagon;
  int at = 0, prev = -1;
  for (int step = 0; step < 5; ++step) {
    out.pentagon.push_back(nb[static_cast<size_t>(at)]);
    int nxt = -1;
    for (int y : ind.graph.neighbors(at))
      if (y != prev) nxt = y;
    prev = at;
    at = nxt;
  }
  return out;
}

}  // namespace minorlab
