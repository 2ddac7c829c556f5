// Brute-force ground truth: exact chromatic numbers, coloring enumeration,
// arbitrary-H minor search, and forbidden-minor class membership.  Kept
// deliberately independent of the search code in minors.hpp/cycles.hpp.
#pragma once

#include <functional>

#include "minorlab/budget.hpp"
#include "minorlab/color_assignment.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/witness.hpp"

namespace minorlab {
namespace oracle {

namespace detail_o {

inline bool colorable(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<int> color(static_cast<size_t>(n), 0);
  // lowest vertex first; a new color may only be introduced in order
  std::function<bool(int, int)> go = [&](int v, int used) -> bool {
    if (v == n) return true;
    int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && color[static_cast<size_t>(u)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[static_cast<size_t>(v)] = c;
      if (go(v + 1, std::max(used, c))) return true;
    }
    color[static_cast<size_t>(v)] = 0;
    return false;
  };
  return go(0, 0);
}

}  // namespace detail_o

// Exact chromatic number by backtracking, desk scale only.
inline int chromatic_number(const Graph& g, int size_cap = 12) {
  const int n = g.vertex_count();
  if (n > size_cap) throw budget_error("chromatic_number: graph beyond size cap");
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  for (int k = 2; k <= n; ++k)
    if (detail_o::colorable(g, k)) return k;
  return n;
}

// Visits every proper <=k-coloring in lexicographic order of the color map.
// The visitor returns false to stop early; the function reports whether the
// enumeration ran to completion.
inline bool enumerate_colorings(const Graph& g, int k,
                                const std::function<bool(const ColorAssignment&)>& visit,
                                int size_cap = 10) {
  const int n = g.vertex_count();
  if (n > size_cap) throw budget_error("enumerate_colorings: graph beyond size cap");
  ColorAssignment cl(k, std::vector<int>(static_cast<size_t>(n), 0));
  std::function<bool(int)> go = [&](int v) -> bool {
    if (v == n) return visit(cl);
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && cl.colors[static_cast<size_t>(u)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cl.colors[static_cast<size_t>(v)] = c;
      if (!go(v + 1)) return false;
    }
    cl.colors[static_cast<size_t>(v)] = 0;
    return true;
  };
  if (n == 0) return visit(cl);
  return go(0);
}

inline long count_colorings(const Graph& g, int k, int size_cap = 10) {
  long count = 0;
  enumerate_colorings(
      g, k,
      [&](const ColorAssignment&) {
        ++count;
        return true;
      },
      size_cap);
  return count;
}

// ---------------------------------------------------------------------------
// General minor containment with witness, by exhaustive branch-set search.

namespace detail_o {

struct MinorSearch {
  const minorlab::detail::BitGraph host;
  std::vector<uint32_t> model_adj;           // model adjacency masks, search order
  std::vector<int> order_to_input;           // search position -> input model id
  std::vector<uint32_t> branch;              // chosen branch sets, by search position
  std::vector<uint32_t> constrain;           // branch i must intersect this mask (0 = free)
  minorlab::detail::BudgetMeter meter;
  int total = 0;

  MinorSearch(const Graph& g, const SearchBudget& b) : host(g), meter(b) {}

  bool place(int i, uint32_t free) {
    if (!meter.tick()) return false;
    if (i == total) return true;
    const int spare = minorlab::detail::popcount(free) - (total - i);
    if (spare < 0) return false;
    // grow connected subsets of `free`, smallest seed first; each subset is
    // visited exactly once (skipped frontier vertices stay forbidden)
    for (uint32_t seeds = free; seeds;) {
      int s = std::countr_zero(seeds);
      seeds &= seeds - 1;
      uint32_t below = (uint32_t{1} << s) - 1;
      if (grow(i, uint32_t{1} << s, below | ~free, free, spare)) return true;
      if (meter.exhausted()) return false;
    }
    return false;
  }

  // S connected; `forbidden` never enters S or its extensions.
  bool grow(int i, uint32_t S, uint32_t forbidden, uint32_t free, int spare) {
    if (!meter.tick()) return false;
    if (ok_here(i, S)) {
      branch[static_cast<size_t>(i)] = S;
      if (place(i + 1, free & ~S)) return true;
      if (meter.exhausted()) return false;
    }
    if (spare <= 0) return false;  // growing S would starve later branches
    uint32_t cand = host.neighborhood(S) & ~S & ~forbidden;
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      if (grow(i, S | (uint32_t{1} << u), forbidden, free, spare - 1)) return true;
      if (meter.exhausted()) return false;
      forbidden |= uint32_t{1} << u;
    }
    return false;
  }

  bool ok_here(int i, uint32_t S) const {
    if (constrain[static_cast<size_t>(i)] && !(S & constrain[static_cast<size_t>(i)])) return false;
    uint32_t nb = host.neighborhood(S);
    uint32_t need = model_adj[static_cast<size_t>(i)] & ((uint32_t{1} << i) - 1);
    while (need) {
      int j = std::countr_zero(need);
      need &= need - 1;
      if (!(nb & branch[static_cast<size_t>(j)])) return false;
    }
    return true;
  }
};

}  // namespace detail_o

// Searches for an h-minor of g.  `constraints` (optional, indexed by model
// vertex) restricts branch set i to intersect the given vertex set.
inline SearchOutcome<MinorWitness> has_minor(const Graph& g, const Graph& h,
                                             const SearchBudget& budget = SearchBudget(),
                                             const std::vector<VertexSet>* constraints = nullptr) {
  const int hn = h.vertex_count();
  if (hn == 0) return SearchOutcome<MinorWitness>::found_with(MinorWitness{});
  if (g.vertex_count() > 32) return SearchOutcome<MinorWitness>::unknown();
  if (hn > g.vertex_count()) return SearchOutcome<MinorWitness>::absent();

  // high-degree model vertices first
  std::vector<int> order(static_cast<size_t>(hn));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });

  detail_o::MinorSearch ms(g, budget);
  ms.total = hn;
  ms.order_to_input = order;
  ms.branch.assign(static_cast<size_t>(hn), 0);
  ms.model_adj.assign(static_cast<size_t>(hn), 0);
  ms.constrain.assign(static_cast<size_t>(hn), 0);
  std::vector<int> pos(static_cast<size_t>(hn));
  for (int i = 0; i < hn; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  for (auto [a, b] : h.edges()) {
    int pa = pos[static_cast<size_t>(a)], pb = pos[static_cast<size_t>(b)];
    ms.model_adj[static_cast<size_t>(pa)] |= uint32_t{1} << pb;
    ms.model_adj[static_cast<size_t>(pb)] |= uint32_t{1} << pa;
  }
  if (constraints) {
    for (int v = 0; v < hn; ++v)
      if (!(*constraints)[static_cast<size_t>(v)].empty())
        ms.constrain[static_cast<size_t>(pos[static_cast<size_t>(v)])] =
            set_to_mask((*constraints)[static_cast<size_t>(v)]);
  }

  bool found = ms.place(0, ms.host.all);
  if (found) {
    MinorWitness w;
    w.branch_sets.assign(static_cast<size_t>(hn), {});
    for (int i = 0; i < hn; ++i)
      w.branch_sets[static_cast<size_t>(order[static_cast<size_t>(i)])] = mask_to_set(ms.branch[static_cast<size_t>(i)]);
    w.model_edges = h.edges();
    return SearchOutcome<MinorWitness>::found_with(std::move(w));
  }
  if (ms.meter.exhausted()) return SearchOutcome<MinorWitness>::unknown();
  return SearchOutcome<MinorWitness>::absent();
}

// ---------------------------------------------------------------------------
// Forbidden-minor class membership (Wagner-style).

enum class GraphClass { planar, outerplanar };

struct ClassResult {
  SearchStatus status = SearchStatus::unknown;
  bool member = false;
  MinorWitness forbidden;      // set when member == false
  std::string forbidden_name;  // "K4", "K2,3", "K5", "K3,3"

  bool decided() const { return status != SearchStatus::unknown; }
};

inline ClassResult class_membership(const Graph& g, GraphClass cls,
                                    const SearchBudget& budget = SearchBudget()) {
  struct Probe {
    Graph h;
    const char* name;
  };
  std::vector<Probe> probes;
  if (cls == GraphClass::outerplanar)
    probes = {{make_complete(4), "K4"}, {make_complete_bipartite(2, 3), "K2,3"}};
  else
    probes = {{make_complete(5), "K5"}, {make_complete_bipartite(3, 3), "K3,3"}};

  ClassResult out;
  for (const auto& p : probes) {
    auto r = has_minor(g, p.h, budget);
    if (r.status == SearchStatus::unknown) return out;  // unknown
    if (r.found()) {
      out.status = SearchStatus::found;
      out.member = false;
      out.forbidden = *r.value;
      out.forbidden_name = p.name;
      return out;
    }
  }
  out.status = SearchStatus::found;
  out.member = true;
  return out;
}

}  // namespace oracle
}  // namespace minorlab
