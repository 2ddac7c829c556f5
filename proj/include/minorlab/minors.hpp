// Minor witnesses on designated vertex sets, set extension under minor
// actions, admissive contraction, consistent cut sets, and formal graphs.
// Searches here are written independently of oracle.hpp on purpose: results
// cross-check each other.
#pragma once

#include <variant>

#include "minorlab/budget.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/oracle.hpp"
#include "minorlab/witness.hpp"

namespace minorlab {

// ---------------------------------------------------------------------------
// Equivalence relations on vertex sets; admissive = no edge inside a block.

struct EquivRelation {
  std::vector<VertexSet> blocks;

  VertexSet support() const {
    VertexSet s;
    for (const auto& b : blocks) s.insert(s.end(), b.begin(), b.end());
    std::sort(s.begin(), s.end());
    return s;
  }

  bool partitions(const VertexSet& s) const {
    VertexSet sup = support();
    if (sup != s) return false;
    size_t total = 0;
    for (const auto& b : blocks) {
      if (b.empty()) return false;
      total += b.size();
    }
    return total == sup.size();  // disjoint since support() dedups via sort+compare
  }

  bool admissive(const Graph& g) const {
    for (const auto& b : blocks)
      for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j)
          if (g.has_edge(b[i], b[j])) return false;
    return true;
  }
};

// Contracts each block of R to a super-vertex; edges outside S are intact.
// New ids follow ascending representatives (block rep = least member).
inline ApplyResult abs_contract(const Graph& g, const VertexSet& s, const EquivRelation& r) {
  if (!r.partitions(s)) throw std::invalid_argument("abs_contract: relation does not partition S");
  if (!r.admissive(g)) throw std::invalid_argument("abs_contract: relation not admissive");
  const int n = g.vertex_count();
  std::vector<int> rep(static_cast<size_t>(n));
  std::iota(rep.begin(), rep.end(), 0);
  for (const auto& b : r.blocks)
    for (int v : b) rep[static_cast<size_t>(v)] = b.front();  // blocks sorted ascending
  std::vector<int> reps;
  for (int v = 0; v < n; ++v)
    if (rep[static_cast<size_t>(v)] == v) reps.push_back(v);
  std::vector<int> relabel(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < reps.size(); ++i) relabel[static_cast<size_t>(reps[i])] = static_cast<int>(i);
  for (int v = 0; v < n; ++v) relabel[static_cast<size_t>(v)] = relabel[static_cast<size_t>(rep[static_cast<size_t>(v)])];
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int nu = relabel[static_cast<size_t>(u)], nv = relabel[static_cast<size_t>(v)];
    if (nu != nv) edges.emplace_back(nu, nv);
  }
  return {Graph(static_cast<int>(reps.size()), edges), relabel};
}

// ---------------------------------------------------------------------------
// Tracked sets: Ex(U) under sequences of minor actions.

struct TrackedSet {
  VertexSet current;
  std::vector<std::pair<MinorAction, std::vector<int>>> history;
};

// Applies one minor action to g and extends ts per the case rules:
// deleting v in U swaps v for N(v); contracting an edge with an endpoint in
// U swaps the endpoints for the merged vertex; anything else leaves U alone.
inline std::pair<TrackedSet, ApplyResult> extend_set(const TrackedSet& ts, const Graph& g,
                                                     const MinorAction& a) {
  ApplyResult ar = apply_minor_action(g, a);
  auto in_u = [&](int v) { return std::binary_search(ts.current.begin(), ts.current.end(), v); };
  std::set<int> next;
  switch (a.kind) {
    case MinorAction::Kind::delete_vertex:
      for (int v : ts.current)
        if (v != a.u) next.insert(ar.relabel[static_cast<size_t>(v)]);
      if (in_u(a.u))
        for (int w : g.neighbors(a.u)) next.insert(ar.relabel[static_cast<size_t>(w)]);
      break;
    case MinorAction::Kind::contract_edge: {
      bool touches = in_u(a.u) || in_u(a.v);
      for (int v : ts.current)
        if (v != a.u && v != a.v) next.insert(ar.relabel[static_cast<size_t>(v)]);
      if (touches) next.insert(ar.relabel[static_cast<size_t>(a.u)]);
      break;
    }
    case MinorAction::Kind::delete_edge:
      for (int v : ts.current) next.insert(ar.relabel[static_cast<size_t>(v)]);
      break;
  }
  TrackedSet out;
  out.current.assign(next.begin(), next.end());
  out.history = ts.history;
  out.history.emplace_back(a, ar.relabel);
  return {out, ar};
}

// ---------------------------------------------------------------------------
// K_x minor on U: every branch set must meet U.  The search anchors each
// branch at a U-vertex with anchors increasing, and enumerates connected
// candidate sets by binary include/exclude decisions.

namespace detail_m {

struct CliqueOnSearch {
  minorlab::detail::BitGraph host;
  uint32_t umask = 0;
  int x = 0;
  minorlab::detail::BudgetMeter meter;
  std::vector<uint32_t> branch;

  CliqueOnSearch(const Graph& g, const SearchBudget& b) : host(g), meter(b) {}

  bool run() { return place(0, host.all, 0); }

  bool place(int i, uint32_t free, int min_anchor) {
    if (!meter.tick()) return false;
    if (i == x) return true;
    uint32_t anchors = umask & free;
    anchors &= ~((uint32_t{1} << min_anchor) - 1);
    while (anchors) {
      int a = std::countr_zero(anchors);
      anchors &= anchors - 1;
      // U-vertices below the anchor stay out of this branch so that the
      // anchor is the least U-vertex it contains
      uint32_t pool = free & ~(umask & ((uint32_t{1} << a) - 1));
      if (extend(i, uint32_t{1} << a, pool & ~(uint32_t{1} << a), a)) return true;
      if (meter.exhausted()) return false;
    }
    return false;
  }

  // Decide membership of frontier vertices one at a time.
  bool extend(int i, uint32_t S, uint32_t pool, int anchor) {
    if (!meter.tick()) return false;
    if (adjacent_to_all_previous(i, S)) {
      branch[static_cast<size_t>(i)] = S;
      uint32_t free = pool & ~S;
      // previous branches' pools differ; recompute from scratch
      uint32_t taken = 0;
      for (int j = 0; j <= i; ++j) taken |= branch[static_cast<size_t>(j)];
      if (place(i + 1, host.all & ~taken, anchor + 1)) return true;
      if (meter.exhausted()) return false;
    }
    uint32_t frontier = host.neighborhood(S) & pool & ~S;
    if (!frontier) return false;
    int u = std::countr_zero(frontier);
    // include u
    if (extend(i, S | (uint32_t{1} << u), pool, anchor)) return true;
    if (meter.exhausted()) return false;
    // exclude u for good
    return extend(i, S, pool & ~(uint32_t{1} << u), anchor);
  }

  bool adjacent_to_all_previous(int i, uint32_t S) const {
    uint32_t nb = host.neighborhood(S);
    for (int j = 0; j < i; ++j)
      if (!(nb & branch[static_cast<size_t>(j)])) return false;
    return true;
  }
};

}  // namespace detail_m

inline SearchOutcome<MinorWitness> kx_minor_on(const Graph& g, const VertexSet& u, int x,
                                               const SearchBudget& budget = SearchBudget()) {
  if (x < 1 || u.empty()) throw std::invalid_argument("kx_minor_on: need x >= 1 and U nonempty");
  if (g.vertex_count() > 32) return SearchOutcome<MinorWitness>::unknown();
  if (static_cast<int>(u.size()) < x) return SearchOutcome<MinorWitness>::absent();
  detail_m::CliqueOnSearch cs(g, budget);
  cs.umask = set_to_mask(u);
  cs.x = x;
  cs.branch.assign(static_cast<size_t>(x), 0);
  if (cs.run()) {
    MinorWitness w;
    for (int i = 0; i < x; ++i) w.branch_sets.push_back(mask_to_set(cs.branch[static_cast<size_t>(i)]));
    for (int i = 0; i < x; ++i)
      for (int j = i + 1; j < x; ++j) w.model_edges.emplace_back(i, j);
    return SearchOutcome<MinorWitness>::found_with(std::move(w));
  }
  if (cs.meter.exhausted()) return SearchOutcome<MinorWitness>::unknown();
  return SearchOutcome<MinorWitness>::absent();
}

// ---------------------------------------------------------------------------
// K_{x,y} minor with optional side constraints: each upper branch set must
// meet `uppers` (when nonempty), lower ones `lowers`.

namespace detail_m {

struct BipartiteSearch {
  minorlab::detail::BitGraph host;
  uint32_t upper_mask = 0, lower_mask = 0;  // 0 = unconstrained
  int x = 0, y = 0;
  minorlab::detail::BudgetMeter meter;
  std::vector<uint32_t> ub, lb;

  BipartiteSearch(const Graph& g, const SearchBudget& b) : host(g), meter(b) {}

  bool run() { return place_upper(0, host.all, 0); }

  static uint32_t anchors_of(uint32_t cmask, uint32_t free, int min_anchor) {
    uint32_t base = cmask ? (cmask & free) : free;
    return base & ~((uint32_t{1} << min_anchor) - 1);
  }

  bool place_upper(int i, uint32_t free, int min_anchor) {
    if (!meter.tick()) return false;
    if (i == x) return place_lower(0, free, 0);
    uint32_t anchors = anchors_of(upper_mask, free, min_anchor);
    while (anchors) {
      int a = std::countr_zero(anchors);
      anchors &= anchors - 1;
      uint32_t canon = upper_mask ? upper_mask : host.all;
      uint32_t pool = free & ~(canon & ((uint32_t{1} << a) - 1));
      if (extend(true, i, uint32_t{1} << a, pool & ~(uint32_t{1} << a), a)) return true;
      if (meter.exhausted()) return false;
    }
    return false;
  }

  bool place_lower(int i, uint32_t free, int min_anchor) {
    if (!meter.tick()) return false;
    if (i == y) return true;
    uint32_t anchors = anchors_of(lower_mask, free, min_anchor);
    while (anchors) {
      int a = std::countr_zero(anchors);
      anchors &= anchors - 1;
      uint32_t canon = lower_mask ? lower_mask : host.all;
      uint32_t pool = free & ~(canon & ((uint32_t{1} << a) - 1));
      if (extend(false, i, uint32_t{1} << a, pool & ~(uint32_t{1} << a), a)) return true;
      if (meter.exhausted()) return false;
    }
    return false;
  }

  bool extend(bool upper_side, int i, uint32_t S, uint32_t pool, int anchor) {
    if (!meter.tick()) return false;
    bool ok = true;
    if (!upper_side) {
      // a lower branch must touch every upper branch
      uint32_t nb = host.neighborhood(S);
      for (int j = 0; j < x && ok; ++j)
        if (!(nb & ub[static_cast<size_t>(j)])) ok = false;
    }
    if (ok) {
      auto& slot = upper_side ? ub[static_cast<size_t>(i)] : lb[static_cast<size_t>(i)];
      slot = S;
      uint32_t taken = 0;
      for (int j = 0; j < x; ++j)
        if (upper_side ? j <= i : true) taken |= ub[static_cast<size_t>(j)];
      for (int j = 0; j < (upper_side ? 0 : i + 1); ++j) taken |= lb[static_cast<size_t>(j)];
      bool deeper = upper_side ? place_upper(i + 1, host.all & ~taken, anchor + 1)
                               : place_lower(i + 1, host.all & ~taken, anchor + 1);
      if (deeper) return true;
      if (meter.exhausted()) return false;
    }
    uint32_t frontier = host.neighborhood(S) & pool & ~S;
    if (!frontier) return false;
    int u = std::countr_zero(frontier);
    if (extend(upper_side, i, S | (uint32_t{1} << u), pool, anchor)) return true;
    if (meter.exhausted()) return false;
    return extend(upper_side, i, S, pool & ~(uint32_t{1} << u), anchor);
  }
};

}  // namespace detail_m

inline SearchOutcome<MinorWitness> bipartite_minor_on(const Graph& g, const VertexSet& uppers,
                                                      const VertexSet& lowers, int x, int y,
                                                      const SearchBudget& budget = SearchBudget()) {
  if (x < 1 || y < 1) throw std::invalid_argument("bipartite_minor_on: need x,y >= 1");
  if (g.vertex_count() > 32) return SearchOutcome<MinorWitness>::unknown();
  if (g.vertex_count() < x + y) return SearchOutcome<MinorWitness>::absent();
  if (!uppers.empty() && static_cast<int>(uppers.size()) < x) return SearchOutcome<MinorWitness>::absent();
  if (!lowers.empty() && static_cast<int>(lowers.size()) < y) return SearchOutcome<MinorWitness>::absent();
  detail_m::BipartiteSearch bs(g, budget);
  bs.upper_mask = set_to_mask(uppers);
  bs.lower_mask = set_to_mask(lowers);
  bs.x = x;
  bs.y = y;
  bs.ub.assign(static_cast<size_t>(x), 0);
  bs.lb.assign(static_cast<size_t>(y), 0);
  if (bs.run()) {
    MinorWitness w;
    for (int i = 0; i < x; ++i) w.branch_sets.push_back(mask_to_set(bs.ub[static_cast<size_t>(i)]));
    for (int j = 0; j < y; ++j) w.branch_sets.push_back(mask_to_set(bs.lb[static_cast<size_t>(j)]));
    for (int i = 0; i < x; ++i)
      for (int j = 0; j < y; ++j) w.model_edges.emplace_back(i, x + j);
    return SearchOutcome<MinorWitness>::found_with(std::move(w));
  }
  if (bs.meter.exhausted()) return SearchOutcome<MinorWitness>::unknown();
  return SearchOutcome<MinorWitness>::absent();
}

// ---------------------------------------------------------------------------
// Consistent cut sets (P2): within each of the two sides C_i ∪ W, minor
// actions can realize abs_R(W) with a clique induced on it.  Realization on
// a side amounts to disjoint connected sets T_B ⊇ B with T_B ∩ W = B,
// pairwise adjacent; contractions may run through the side's interior.

// Realization sets per side: T_B >= B, connected, pairwise adjacent.
struct ConsistencyWitness {
  VertexSet side1, side2;                  // the two component groups
  std::vector<VertexSet> sets1, sets2;     // per-block realization, by block index
};

namespace detail_m {

inline bool realize_side(const Graph& g, const std::vector<VertexSet>& blocks, const VertexSet& side,
                         minorlab::detail::BudgetMeter& meter, std::vector<VertexSet>* chosen_out = nullptr) {
  minorlab::detail::BitGraph bg(g);
  uint32_t side_mask = set_to_mask(side);
  std::vector<uint32_t> base;
  for (const auto& b : blocks) base.push_back(set_to_mask(b));
  std::vector<uint32_t> chosen(blocks.size(), 0);

  std::function<bool(size_t, uint32_t)> go = [&](size_t i, uint32_t used) -> bool {
    if (!meter.tick()) return false;
    if (i == blocks.size()) {
      for (size_t a = 0; a < blocks.size(); ++a)
        for (size_t b = a + 1; b < blocks.size(); ++b)
          if (!bg.adjacent_sets(chosen[a], chosen[b])) return false;
      if (chosen_out) {
        chosen_out->clear();
        for (uint32_t m : chosen) chosen_out->push_back(mask_to_set(m));
      }
      return true;
    }
    uint32_t pool = side_mask & ~used;
    VertexSet extra = mask_to_set(pool);
    // ascending-size subsets of the side interior joined to the block
    const size_t pn = extra.size();
    std::vector<uint32_t> subsets;
    for (uint32_t m = 0; m < (uint32_t{1} << pn); ++m) subsets.push_back(m);
    std::stable_sort(subsets.begin(), subsets.end(), [](uint32_t a, uint32_t b) {
      return minorlab::detail::popcount(a) < minorlab::detail::popcount(b);
    });
    for (uint32_t m : subsets) {
      if (!meter.tick()) return false;
      uint32_t t = base[i];
      for (size_t k = 0; k < pn; ++k)
        if (m & (uint32_t{1} << k)) t |= uint32_t{1} << extra[k];
      if (!bg.connected_set(t)) continue;
      chosen[i] = t;
      if (go(i + 1, used | (t & side_mask))) return true;
      if (meter.exhausted()) return false;
    }
    return false;
  };
  return go(0, 0);
}

}  // namespace detail_m

inline SearchOutcome<bool> is_consistent_cut_set(const Graph& g, const VertexSet& w,
                                                 const EquivRelation& r,
                                                 const SearchBudget& budget = SearchBudget(),
                                                 ConsistencyWitness* witness_out = nullptr) {
  if (!separates(g, w)) throw std::invalid_argument("is_consistent_cut_set: W is not a cut set");
  if (!r.partitions(w) || !r.admissive(g))
    throw std::invalid_argument("is_consistent_cut_set: R must be admissive on W");
  if (g.vertex_count() > 32) return SearchOutcome<bool>::unknown();

  auto rest = induced_subgraph(g, [&] {
    VertexSet keep;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!std::binary_search(w.begin(), w.end(), v)) keep.push_back(v);
    return keep;
  }());
  auto comps = components(rest.graph);
  std::vector<int> back(static_cast<size_t>(rest.graph.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    if (rest.relabel[static_cast<size_t>(v)] != -1) back[static_cast<size_t>(rest.relabel[static_cast<size_t>(v)])] = v;

  // the two sides are any bipartition of the components; try them all,
  // anchoring the first component on side 1 to halve the work
  const size_t c = comps.size();
  minorlab::detail::BudgetMeter meter(budget);
  for (uint32_t split = 0; split < (uint32_t{1} << (c - 1)); ++split) {
    VertexSet side1, side2;
    for (size_t i = 0; i < c; ++i) {
      bool first = i == 0 || !(split & (uint32_t{1} << (i - 1)));
      for (int v : comps[i]) (first ? side1 : side2).push_back(back[static_cast<size_t>(v)]);
    }
    if (side2.empty()) continue;
    std::sort(side1.begin(), side1.end());
    std::sort(side2.begin(), side2.end());
    std::vector<VertexSet> sets1, sets2;
    if (detail_m::realize_side(g, r.blocks, side1, meter, &sets1) &&
        detail_m::realize_side(g, r.blocks, side2, meter, &sets2)) {
      if (witness_out) *witness_out = ConsistencyWitness{side1, side2, sets1, sets2};
      return SearchOutcome<bool>::found_with(true);
    }
    if (meter.exhausted()) return SearchOutcome<bool>::unknown();
  }
  return SearchOutcome<bool>::found_with(false);
}

// Enumerates all admissive equivalence relations on w (|w| <= 6), smallest
// block count first, for callers that want candidates.
inline std::vector<EquivRelation> admissive_relations(const Graph& g, const VertexSet& w) {
  if (w.size() > 6) throw std::invalid_argument("admissive_relations: set too large");
  std::vector<EquivRelation> out;
  std::vector<int> assign(w.size(), 0);
  std::function<void(size_t, int)> go = [&](size_t i, int used) {
    if (i == w.size()) {
      EquivRelation r;
      r.blocks.assign(static_cast<size_t>(used), {});
      for (size_t j = 0; j < w.size(); ++j) r.blocks[static_cast<size_t>(assign[j])].push_back(w[j]);
      if (r.admissive(g)) out.push_back(std::move(r));
      return;
    }
    for (int b = 0; b <= used && b < static_cast<int>(w.size()); ++b) {
      assign[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  go(0, 0);
  std::stable_sort(out.begin(), out.end(),
                   [](const EquivRelation& a, const EquivRelation& b) { return a.blocks.size() < b.blocks.size(); });
  return out;
}

// ---------------------------------------------------------------------------
// Formal graphs (P3): no K5 or K3,3 minor after adding an apex over U.

inline SearchOutcome<bool> is_formal(const Graph& g, const VertexSet& u,
                                     const SearchBudget& budget = SearchBudget()) {
  if (u.empty()) throw std::invalid_argument("is_formal: U must be nonempty");
  const int n = g.vertex_count();
  auto edges = g.edges();
  for (int v : u) edges.emplace_back(v, n);
  Graph apexed(n + 1, edges);
  auto k5 = oracle::has_minor(apexed, make_complete(5), budget);
  if (k5.status == SearchStatus::unknown) return SearchOutcome<bool>::unknown();
  if (k5.found()) return SearchOutcome<bool>::found_with(false);
  auto k33 = oracle::has_minor(apexed, make_complete_bipartite(3, 3), budget);
  if (k33.status == SearchStatus::unknown) return SearchOutcome<bool>::unknown();
  if (k33.found()) return SearchOutcome<bool>::found_with(false);
  return SearchOutcome<bool>::found_with(true);
}

}  // namespace minorlab
