// Twin-cycles, cycle reforming, and cycle-through-set search (P3's toolkit).
#pragma once

#include <functional>
#include <optional>

#include "minorlab/budget.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

using Cycle = std::vector<int>;  // vertices in cyclic order, no repeats

inline bool is_simple_cycle(const Graph& g, const Cycle& cy) {
  if (cy.size() < 3) return false;
  std::set<int> seen(cy.begin(), cy.end());
  if (seen.size() != cy.size()) return false;
  for (size_t i = 0; i < cy.size(); ++i)
    if (!g.has_edge(cy[i], cy[(i + 1) % cy.size()])) return false;
  return true;
}

// Two cycles sharing a path; the designated set meets both exclusive halves
// and the path's interior.
struct TwinCycle {
  Cycle cy1, cy2;
  std::vector<int> shared_path;  // endpoints first/last = crossing vertices
  std::pair<int, int> crossing;
};

inline bool validate_twin_cycle(const Graph& g, const TwinCycle& t, const VertexSet& u) {
  if (!is_simple_cycle(g, t.cy1) || !is_simple_cycle(g, t.cy2)) return false;
  if (t.shared_path.size() < 3) return false;
  for (size_t i = 0; i + 1 < t.shared_path.size(); ++i)
    if (!g.has_edge(t.shared_path[i], t.shared_path[i + 1])) return false;
  std::set<int> s1(t.cy1.begin(), t.cy1.end()), s2(t.cy2.begin(), t.cy2.end());
  std::set<int> p(t.shared_path.begin(), t.shared_path.end());
  std::set<int> inter;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::inserter(inter, inter.begin()));
  if (inter != p) return false;
  if (t.shared_path.front() != t.crossing.first || t.shared_path.back() != t.crossing.second) return false;
  auto hits = [&](const std::set<int>& part) {
    for (int v : u)
      if (part.count(v)) return true;
    return false;
  };
  std::set<int> half1, half2, pin;
  for (int v : s1)
    if (!p.count(v)) half1.insert(v);
  for (int v : s2)
    if (!p.count(v)) half2.insert(v);
  for (int v : p)
    if (v != t.crossing.first && v != t.crossing.second) pin.insert(v);
  if (!hits(half1) || !hits(half2) || !hits(pin)) return false;
  // U inside the subgraph
  for (int v : u)
    if (!s1.count(v) && !s2.count(v)) return false;
  return true;
}

namespace detail_c {

// All simple a->b paths via DFS, ascending neighbor order, with an avoid set.
// The visitor gets each path (a..b); returning false stops the enumeration.
inline bool for_each_path(const Graph& g, int a, int b, uint32_t avoid,
                          minorlab::detail::BudgetMeter& meter,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> path{a};
  uint32_t on_path = uint32_t{1} << a;
  std::function<bool(int)> dfs = [&](int v) -> bool {
    if (!meter.tick()) return false;
    for (int w : g.neighbors(v)) {
      if (w == b) {
        path.push_back(b);
        bool keep = visit(path);
        path.pop_back();
        if (!keep) return false;
        continue;
      }
      uint32_t bit = uint32_t{1} << w;
      if ((avoid & bit) || (on_path & bit)) continue;
      path.push_back(w);
      on_path |= bit;
      bool keep = dfs(w);
      path.pop_back();
      on_path &= ~bit;
      if (!keep) return false;
    }
    return true;
  };
  return dfs(a);
}

}  // namespace detail_c

// Exhaustive theta-subgraph search: three internally disjoint a-b paths with
// nonempty interiors, each interior meeting U, and U inside the union.
inline SearchOutcome<TwinCycle> find_twin_cycle(const Graph& g, const VertexSet& u,
                                                const SearchBudget& budget = SearchBudget()) {
  const int n = g.vertex_count();
  if (n > 32) return SearchOutcome<TwinCycle>::unknown();
  uint32_t umask = set_to_mask(u);
  minorlab::detail::BudgetMeter meter(budget);
  std::optional<TwinCycle> hit;

  auto interior_mask = [](const std::vector<int>& p) {
    uint32_t m = 0;
    for (size_t i = 1; i + 1 < p.size(); ++i) m |= uint32_t{1} << p[i];
    return m;
  };

  for (int a = 0; a < n && !hit; ++a) {
    for (int b = a + 1; b < n && !hit; ++b) {
      if (g.degree(a) < 3 || g.degree(b) < 3) continue;
      uint32_t ends = (uint32_t{1} << a) | (uint32_t{1} << b);
      detail_c::for_each_path(g, a, b, 0, meter, [&](const std::vector<int>& p1) {
        uint32_t i1 = interior_mask(p1);
        if (!i1 || !(i1 & umask)) return true;
        detail_c::for_each_path(g, a, b, i1, meter, [&](const std::vector<int>& p2) {
          uint32_t i2 = interior_mask(p2);
          if (!i2 || !(i2 & umask)) return true;
          if (std::countr_zero(i1) > std::countr_zero(i2)) return true;  // canonical order
          detail_c::for_each_path(g, a, b, i1 | i2, meter, [&](const std::vector<int>& p3) {
            uint32_t i3 = interior_mask(p3);
            if (!i3 || !(i3 & umask)) return true;
            if (std::countr_zero(i2) > std::countr_zero(i3)) return true;
            if ((umask & ~(i1 | i2 | i3 | ends)) != 0) return true;  // U must sit inside
            TwinCycle t;
            t.shared_path = p1;
            t.crossing = {a, b};
            t.cy1 = p1;
            for (size_t i = p2.size() - 2; i >= 1; --i) t.cy1.push_back(p2[i]);
            t.cy2 = p1;
            for (size_t i = p3.size() - 2; i >= 1; --i) t.cy2.push_back(p3[i]);
            hit = std::move(t);
            return false;
          });
          return !hit && !meter.exhausted();
        });
        return !hit && !meter.exhausted();
      });
      if (meter.exhausted() && !hit) return SearchOutcome<TwinCycle>::unknown();
    }
  }
  if (hit) return SearchOutcome<TwinCycle>::found_with(std::move(*hit));
  return SearchOutcome<TwinCycle>::absent();
}

// Simple cycle containing all of U, found by exhaustive DFS from min(U).
inline SearchOutcome<Cycle> cycle_through(const Graph& g, const VertexSet& u,
                                          const SearchBudget& budget = SearchBudget()) {
  if (u.empty()) throw std::invalid_argument("cycle_through: U must be nonempty");
  if (g.vertex_count() > 32) return SearchOutcome<Cycle>::unknown();
  uint32_t umask = set_to_mask(u);
  const int start = u.front();
  minorlab::detail::BudgetMeter meter(budget);
  std::vector<int> path{start};
  uint32_t on_path = uint32_t{1} << start;
  std::optional<Cycle> hit;

  std::function<bool(int)> dfs = [&](int v) -> bool {
    if (!meter.tick()) return false;
    for (int w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && (umask & ~on_path) == 0) {
        hit = path;
        return false;
      }
      uint32_t bit = uint32_t{1} << w;
      if (on_path & bit) continue;
      path.push_back(w);
      on_path |= bit;
      bool keep = dfs(w);
      path.pop_back();
      on_path &= ~bit;
      if (!keep) return false;
    }
    return true;
  };
  dfs(start);
  if (hit) return SearchOutcome<Cycle>::found_with(std::move(*hit));
  if (meter.exhausted()) return SearchOutcome<Cycle>::unknown();
  return SearchOutcome<Cycle>::absent();
}

// One reforming step: pick the lowest-id u in U \ cy reachable into cy by two
// disjoint paths whose replaced arc is U-free inside, preferring the shortest
// replaced arc, ties by lexicographic path pair.  nullopt = no progress.
inline std::optional<Cycle> reform_cycle(const Graph& g, const Cycle& cy, const VertexSet& u,
                                         const SearchBudget& budget = SearchBudget()) {
  if (!is_simple_cycle(g, cy)) throw std::invalid_argument("reform_cycle: not a simple cycle");
  uint32_t cymask = 0;
  for (int v : cy) cymask |= uint32_t{1} << v;
  minorlab::detail::BudgetMeter meter(budget);

  std::vector<int> pos(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < cy.size(); ++i) pos[static_cast<size_t>(cy[i])] = static_cast<int>(i);
  const int L = static_cast<int>(cy.size());

  for (int cand : u) {
    if (pos[static_cast<size_t>(cand)] != -1) continue;
    // simple paths from cand that first touch the cycle at their far end
    std::vector<std::vector<int>> paths;
    std::vector<int> path{cand};
    uint32_t on_path = uint32_t{1} << cand;
    std::function<void(int)> dfs = [&](int v) {
      if (!meter.tick()) return;
      for (int w : g.neighbors(v)) {
        uint32_t bit = uint32_t{1} << w;
        if (cymask & bit) {
          path.push_back(w);
          paths.push_back(path);
          path.pop_back();
          continue;
        }
        if (on_path & bit) continue;
        path.push_back(w);
        on_path |= bit;
        dfs(w);
        path.pop_back();
        on_path &= ~bit;
      }
    };
    dfs(cand);

    struct Choice {
      int arc_len;
      std::vector<int> p1, p2;
      int a, b;
      bool arc_from_a;  // replaced arc runs a -> b in cycle direction
    };
    std::optional<Choice> best;
    auto consider = [&](const std::vector<int>& p1, const std::vector<int>& p2) {
      int a = p1.back(), b = p2.back();
      if (a == b) return;
      // interiors disjoint (they share cand at the front)
      uint32_t m1 = 0, m2 = 0;
      for (size_t i = 1; i + 1 < p1.size(); ++i) m1 |= uint32_t{1} << p1[i];
      for (size_t i = 1; i + 1 < p2.size(); ++i) m2 |= uint32_t{1} << p2[i];
      if (m1 & m2) return;
      int pa = pos[static_cast<size_t>(a)], pb = pos[static_cast<size_t>(b)];
      for (bool from_a : {true, false}) {
        int s = from_a ? pa : pb, t = from_a ? pb : pa;
        int len = (t - s + L) % L;  // replaced arc s..t in cycle direction
        bool ufree = true;
        for (int k = 1; k < len; ++k)
          if (std::binary_search(u.begin(), u.end(), cy[static_cast<size_t>((s + k) % L)])) {
            ufree = false;
            break;
          }
        if (!ufree) continue;
        Choice c{len, p1, p2, a, b, from_a};
        auto key = [](const Choice& x) { return std::tuple(x.arc_len, x.p1, x.p2, x.arc_from_a); };
        if (!best || key(c) < key(*best)) best = c;
      }
    };
    for (size_t i = 0; i < paths.size(); ++i)
      for (size_t j = 0; j < paths.size(); ++j)
        if (i != j) consider(paths[i], paths[j]);

    if (best) {
      // kept arc runs from the replaced arc's end back to its start
      int pa = pos[static_cast<size_t>(best->a)], pb = pos[static_cast<size_t>(best->b)];
      int s = best->arc_from_a ? pa : pb, t = best->arc_from_a ? pb : pa;
      Cycle out;
      for (int k = t; k != s; k = (k + 1) % L) out.push_back(cy[static_cast<size_t>(k)]);
      out.push_back(cy[static_cast<size_t>(s)]);
      // now at replaced-arc start; walk through cand and back to the end
      const auto& into = best->arc_from_a ? best->p1 : best->p2;   // ends at arc start
      const auto& outof = best->arc_from_a ? best->p2 : best->p1;  // ends at arc end
      for (size_t k = into.size() - 2; k >= 1; --k) out.push_back(into[k]);
      out.push_back(cand);
      for (size_t k = 1; k + 1 < outof.size(); ++k) out.push_back(outof[k]);
      if (!is_simple_cycle(g, out)) continue;  // overlapping paths slipped through
      return out;
    }
  }
  return std::nullopt;
}

// Whether X and Y form two clusters of some series of the cycle: projected
// onto the cycle order, each is roundly continuous and they overlap on at
// most one vertex at each junction.
inline bool two_clusters_of_cycle(const Cycle& cy, const VertexSet& x, const VertexSet& y) {
  std::vector<int> labels;  // 1 = X, 2 = Y, 3 = both
  for (int v : cy) {
    bool in_x = std::binary_search(x.begin(), x.end(), v);
    bool in_y = std::binary_search(y.begin(), y.end(), v);
    if (in_x || in_y) labels.push_back((in_x ? 1 : 0) | (in_y ? 2 : 0));
  }
  const int m = static_cast<int>(labels.size());
  if (m == 0) return true;
  // try every rotation: X-block (labels 1/3) then Y-block (2/3), shared
  // vertices only at the block boundaries
  for (int r = 0; r < m; ++r) {
    for (int split = 0; split <= m; ++split) {
      bool ok = true;
      int shared = 0;
      for (int i = 0; i < m && ok; ++i) {
        int lab = labels[static_cast<size_t>((r + i) % m)];
        bool in_first = i < split;
        if (lab == 3) {
          ++shared;
          if (!(i == 0 || i == split - 1 || i == split || i == m - 1)) ok = false;
        } else if (in_first && lab != 1)
          ok = false;
        else if (!in_first && lab != 2)
          ok = false;
      }
      if (ok && shared <= 2) return true;
    }
  }
  return false;
}

}  // namespace minorlab
