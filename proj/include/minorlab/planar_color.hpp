// P1's experimental planar 4-coloring procedure: peel a boundary vertex,
// inherit the cluster system (splits per the cluster lemma), apply the
// restoration rules, recurse, restore.  The induction step is contested, so
// the engine is a measurement: any returned assignment is validated, and a
// deadlock yields a structured FailureTrace instead of a result.
#pragma once

#include "minorlab/constraint.hpp"
#include "minorlab/corpus.hpp"
#include "minorlab/wing.hpp"

namespace minorlab {

struct FailureTrace {
  std::vector<int> peel_sequence;
  int level = 0;
  std::string stage;   // "walk", "base", "restoration", "validation"
  std::string detail;
  char rule5_reading = '-';
};

struct PlanarColorResult {
  std::optional<ColorAssignment> assignment;  // on g, palette 4
  std::optional<FailureTrace> failure;
  char rule5_reading = '-';
  bool ok() const { return assignment.has_value(); }
};

namespace detail_p {

struct Span {
  int start = 0, len = 0;  // positions on the walk; len 0 = empty cluster
};

struct PlanarSystem {
  std::vector<Span> clusters;
  std::vector<std::tuple<int, int, Rel>> relations;
  std::vector<std::vector<int>> divisions;
  // declared division-pair demands: true = must be inconsistent
  std::vector<std::tuple<int, int, bool>> demands;
};

// Boundary continuation after peeling walk position p: the interior
// neighbors ordered along the induced path between the walk neighbors, or
// the first permutation passing the definitional check.
inline std::optional<std::vector<int>> boundary_block(const Graph& g, const std::vector<int>& walk,
                                                      size_t p) {
  const int u = walk[p];
  const int L = static_cast<int>(walk.size());
  const int wp = walk[static_cast<size_t>((static_cast<int>(p) - 1 + L) % L)];
  const int wn = walk[static_cast<size_t>((static_cast<int>(p) + 1) % L)];
  // the block is u's link between its walk neighbors: it includes chord
  // members of the walk, which then occur twice (the boundary pinches there)
  VertexSet cand;
  for (int w : g.neighbors(u))
    if (w != wp && w != wn) cand.push_back(w);
  if (cand.empty()) return std::vector<int>{};
  if (L <= 2) return cand;  // the walk barely constrains; keep sorted order
  // Hamiltonian path wp -> wn through the candidates (triangulated-disk case)
  VertexSet scope = cand;
  scope.push_back(wp);
  if (wn != wp) scope.push_back(wn);
  std::sort(scope.begin(), scope.end());
  auto ind = induced_subgraph(g, scope);
  int s = ind.relabel[static_cast<size_t>(wp)], t = ind.relabel[static_cast<size_t>(wn)];
  std::vector<int> path{s};
  std::vector<char> used(static_cast<size_t>(ind.graph.vertex_count()), 0);
  used[static_cast<size_t>(s)] = 1;
  std::optional<std::vector<int>> got;
  std::function<bool(int)> dfs = [&](int v) -> bool {
    if (v == t && path.size() == scope.size()) {
      got = path;
      return true;
    }
    for (int w : ind.graph.neighbors(v)) {
      if (used[static_cast<size_t>(w)] || (w == t && path.size() + 1 != scope.size())) continue;
      used[static_cast<size_t>(w)] = 1;
      path.push_back(w);
      if (dfs(w)) return true;
      path.pop_back();
      used[static_cast<size_t>(w)] = 0;
    }
    return false;
  };
  if (s == t) {
    // single walk neighbor (short walks); order by any spanning path from s
    got.reset();
  } else {
    dfs(s);
  }
  if (got) {
    std::vector<int> back(static_cast<size_t>(ind.graph.vertex_count()));
    for (int v : scope) back[static_cast<size_t>(ind.relabel[static_cast<size_t>(v)])] = v;
    std::vector<int> block;
    for (size_t i = 1; i + 1 < got->size(); ++i) block.push_back(back[static_cast<size_t>((*got)[i])]);
    return block;
  }
  // definitional fallback: try candidate permutations, smallest first
  std::sort(cand.begin(), cand.end());
  if (cand.size() <= 6 && g.vertex_count() <= 11) {
    do {
      std::vector<int> walk2;
      for (size_t i = 0; i < walk.size(); ++i) {
        if (i == p) {
          for (int c : cand) walk2.push_back(c);
        } else {
          walk2.push_back(walk[i]);
        }
      }
      auto del = apply_minor_action(g, MinorAction::del_vertex(u));
      for (int& v : walk2) v = del.relabel[static_cast<size_t>(v)];
      auto chk = trace_check(del.graph, Trace{Trace::Kind::planar_walk, walk2});
      if (chk.status == SearchStatus::found && *chk.value) return cand;
    } while (std::next_permutation(cand.begin(), cand.end()));
  }
  return std::nullopt;
}

struct PlanarEngine {
  std::vector<int> peel_sequence;
  char reading = 'A';

  // gamma colors are tracked per cluster id; vertex u doubles as the new
  // cluster's gamma when peeled
  struct LevelResult {
    std::vector<int> vertex_colors;
    std::vector<int> gamma_colors;  // by cluster id
  };

  std::optional<FailureTrace> fail_;

  std::optional<LevelResult> run(const Graph& g, std::vector<int> walk, const PlanarSystem& sys,
                                 int level) {
    const int n = g.vertex_count();
    const int nc = static_cast<int>(sys.clusters.size());
    auto fail = [&](const std::string& stage, const std::string& detail) {
      fail_ = FailureTrace{peel_sequence, level, stage, detail, reading};
      return std::optional<LevelResult>{};
    };

    if (n == 1) {
      // color the vertex 1 and search gamma colors meeting the local rules
      LevelResult res;
      res.vertex_colors = {1};
      res.gamma_colors.assign(static_cast<size_t>(nc), 0);
      auto ok_so_far = [&](int upto) {
        for (const auto& [i, j, r] : sys.relations) {
          if (i > upto || j > upto) continue;
          int a = res.gamma_colors[static_cast<size_t>(i)], b = res.gamma_colors[static_cast<size_t>(j)];
          if (r == Rel::eq && a != b) return false;
          if (r == Rel::neq && a == b) return false;
        }
        return true;
      };
      std::function<bool(int)> assign = [&](int c) -> bool {
        if (c == nc) return division_demands_ok(sys, res.gamma_colors);
        bool nonempty = sys.clusters[static_cast<size_t>(c)].len > 0;
        for (int col = 1; col <= 4; ++col) {
          if (nonempty && col == 1) continue;  // gamma sits over the vertex colored 1
          res.gamma_colors[static_cast<size_t>(c)] = col;
          if (ok_so_far(c) && assign(c + 1)) return true;
        }
        res.gamma_colors[static_cast<size_t>(c)] = 0;
        return false;
      };
      if (nc > 0 && !assign(0)) return fail("base", "no gamma assignment at the base");
      return res;
    }

    // choose the first non-cut walk vertex
    size_t p = walk.size();
    for (size_t i = 0; i < walk.size(); ++i)
      if (!is_cut_vertex(g, walk[i]) &&
          std::count(walk.begin(), walk.end(), walk[i]) == 1) {
        p = i;
        break;
      }
    if (p == walk.size()) return fail("walk", "no peelable boundary vertex");
    const int u = walk[p];
    peel_sequence.push_back(u);

    auto block = boundary_block(g, walk, p);
    if (!block) return fail("walk", "no planar continuation of the boundary walk");

    // --- inherited system ---
    const int L = static_cast<int>(walk.size());
    const int B = static_cast<int>(block->size());
    auto newpos = [&](int q) {  // old position -> new position
      return std::max(0, q < static_cast<int>(p) ? q : q - 1 + B);
    };
    PlanarSystem sys2;
    std::vector<int> old_to_new(static_cast<size_t>(nc), -1);
    std::vector<int> split_partner(static_cast<size_t>(nc), -1);
    std::vector<int> vanished;
    for (int c = 0; c < nc; ++c) {
      const Span sp = sys.clusters[static_cast<size_t>(c)];
      bool covers = false;
      for (int k = 0; k < sp.len; ++k)
        if ((sp.start + k) % L == static_cast<int>(p)) covers = true;
      if (!covers) {
        Span ns{std::min(newpos(sp.start % L), std::max(0, L - 2 + B)), sp.len};
        old_to_new[static_cast<size_t>(c)] = static_cast<int>(sys2.clusters.size());
        sys2.clusters.push_back(ns);
        continue;
      }
      if (sp.len == 1) {
        vanished.push_back(c);
        continue;
      }
      // split at p: prefix before p, suffix after, either may be empty
      int off = (static_cast<int>(p) - sp.start % L + L) % L;
      Span pre{newpos(sp.start % L), off};
      Span post{newpos((static_cast<int>(p) + 1) % L), sp.len - off - 1};
      old_to_new[static_cast<size_t>(c)] = static_cast<int>(sys2.clusters.size());
      sys2.clusters.push_back(pre);
      split_partner[static_cast<size_t>(c)] = static_cast<int>(sys2.clusters.size());
      sys2.clusters.push_back(post);
    }
    // the neighborhood cluster: from the walk predecessor through the block
    // to the successor
    int new_id = static_cast<int>(sys2.clusters.size());
    {
      int startp = (static_cast<int>(p) - 1 + L) % L;
      Span ns{newpos(startp), std::min(B + 2, L - 1 + B)};
      if (L == 1) ns = Span{0, B};
      sys2.clusters.push_back(ns);
    }

    // relations: survivors inherit; split halves mirror their parent and are
    // tied together; everything that contained u differs from the new cluster
    auto add_rel = [&](int a, int b, Rel r) {
      if (a == b || a < 0 || b < 0) return;
      sys2.relations.emplace_back(a, b, r);
    };
    for (const auto& [i, j, r] : sys.relations) {
      int a = old_to_new[static_cast<size_t>(i)], b = old_to_new[static_cast<size_t>(j)];
      if (a != -1 && b != -1) {
        add_rel(a, b, r);
        if (split_partner[static_cast<size_t>(i)] != -1) add_rel(split_partner[static_cast<size_t>(i)], b, r);
        if (split_partner[static_cast<size_t>(j)] != -1) add_rel(a, split_partner[static_cast<size_t>(j)], r);
      }
    }
    for (int c = 0; c < nc; ++c) {
      if (split_partner[static_cast<size_t>(c)] == -1) continue;
      add_rel(old_to_new[static_cast<size_t>(c)], split_partner[static_cast<size_t>(c)], Rel::eq);
      add_rel(old_to_new[static_cast<size_t>(c)], new_id, Rel::neq);
      add_rel(split_partner[static_cast<size_t>(c)], new_id, Rel::neq);
    }
    // rule 1: a survivor eq-tied to a vanished u-cluster differs from the
    // new cluster
    for (const auto& [i, j, r] : sys.relations) {
      if (r != Rel::eq) continue;
      bool i_van = std::find(vanished.begin(), vanished.end(), i) != vanished.end();
      bool j_van = std::find(vanished.begin(), vanished.end(), j) != vanished.end();
      if (i_van && !j_van && old_to_new[static_cast<size_t>(j)] != -1)
        add_rel(old_to_new[static_cast<size_t>(j)], new_id, Rel::neq);
      if (j_van && !i_van && old_to_new[static_cast<size_t>(i)] != -1)
        add_rel(old_to_new[static_cast<size_t>(i)], new_id, Rel::neq);
    }

    // divisions: map survivors, then rule 4 groups the new cluster with all
    // partners of vanished u-clusters into one division
    int d_u = -1;
    for (size_t d = 0; d < sys.divisions.size() && d_u == -1; ++d)
      for (int c : sys.divisions[d])
        if (std::find(vanished.begin(), vanished.end(), c) != vanished.end()) d_u = static_cast<int>(d);
    std::vector<int> div_map(sys.divisions.size(), -1);
    for (size_t d = 0; d < sys.divisions.size(); ++d) {
      std::vector<int> mem;
      for (int c : sys.divisions[d]) {
        if (old_to_new[static_cast<size_t>(c)] != -1) {
          mem.push_back(old_to_new[static_cast<size_t>(c)]);
          if (split_partner[static_cast<size_t>(c)] != -1) mem.push_back(split_partner[static_cast<size_t>(c)]);
        }
      }
      if (!mem.empty()) {
        div_map[d] = static_cast<int>(sys2.divisions.size());
        sys2.divisions.push_back(mem);
      }
    }
    std::set<int> rule4;
    if (!vanished.empty()) {
      rule4.insert(new_id);
      for (const auto& [i, j, r] : sys.relations) {
        if (r != Rel::neq) continue;
        bool i_van = std::find(vanished.begin(), vanished.end(), i) != vanished.end();
        bool j_van = std::find(vanished.begin(), vanished.end(), j) != vanished.end();
        if (i_van && old_to_new[static_cast<size_t>(j)] != -1) rule4.insert(old_to_new[static_cast<size_t>(j)]);
        if (j_van && old_to_new[static_cast<size_t>(i)] != -1) rule4.insert(old_to_new[static_cast<size_t>(i)]);
      }
      sys2.divisions.push_back(std::vector<int>(rule4.begin(), rule4.end()));
    } else {
      sys2.divisions.push_back({new_id});
    }
    // rule 3: demands flip against the division of the u-clusters
    int new_div = static_cast<int>(sys2.divisions.size()) - 1;
    for (const auto& [a, b, inc] : sys.demands) {
      if (a == d_u && div_map[static_cast<size_t>(b)] != -1)
        sys2.demands.emplace_back(new_div, div_map[static_cast<size_t>(b)], !inc);
      else if (b == d_u && div_map[static_cast<size_t>(a)] != -1)
        sys2.demands.emplace_back(div_map[static_cast<size_t>(a)], new_div, !inc);
      else if (a != d_u && b != d_u && div_map[static_cast<size_t>(a)] != -1 && div_map[static_cast<size_t>(b)] != -1)
        sys2.demands.emplace_back(div_map[static_cast<size_t>(a)], div_map[static_cast<size_t>(b)], inc);
    }

    // new walk and graph
    std::vector<int> walk2;
    for (size_t i = 0; i < walk.size(); ++i) {
      if (i == p) {
        for (int c : *block) walk2.push_back(c);
      } else {
        walk2.push_back(walk[i]);
      }
    }
    auto del = apply_minor_action(g, MinorAction::del_vertex(u));
    for (int& v : walk2) v = del.relabel[static_cast<size_t>(v)];

    auto sub = run(del.graph, walk2, sys2, level + 1);
    if (!sub) return std::nullopt;

    // --- restore ---
    LevelResult res;
    res.vertex_colors.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      if (v != u) res.vertex_colors[static_cast<size_t>(v)] = sub->vertex_colors[static_cast<size_t>(del.relabel[static_cast<size_t>(v)])];
    res.vertex_colors[static_cast<size_t>(u)] = sub->gamma_colors[static_cast<size_t>(new_id)];
    res.gamma_colors.assign(static_cast<size_t>(nc), 0);
    std::vector<int> targets;
    for (int c = 0; c < nc; ++c) {
      if (old_to_new[static_cast<size_t>(c)] != -1)
        res.gamma_colors[static_cast<size_t>(c)] = sub->gamma_colors[static_cast<size_t>(old_to_new[static_cast<size_t>(c)])];
      else
        targets.push_back(c);
    }
    // vanished u-cluster gammas: avoid u's color, respect relations with
    // fixed partners and division budgets plus declared demands
    std::function<bool(size_t)> restore = [&](size_t idx) -> bool {
      if (idx == targets.size()) {
        if (!division_demands_ok(sys, res.gamma_colors)) return false;
        return rule5_ok(sys, res.gamma_colors, reading);
      }
      int c = targets[idx];
      for (int col = 1; col <= 4; ++col) {
        if (col == res.vertex_colors[static_cast<size_t>(u)]) continue;
        bool ok = true;
        for (const auto& [i, j, r] : sys.relations) {
          int other = i == c ? j : (j == c ? i : -1);
          if (other == -1) continue;
          int oc = res.gamma_colors[static_cast<size_t>(other)];
          if (oc == 0) continue;
          if (r == Rel::eq && oc != col) ok = false;
          if (r == Rel::neq && oc == col) ok = false;
        }
        if (!ok) continue;
        res.gamma_colors[static_cast<size_t>(c)] = col;
        if (restore(idx + 1)) return true;
      }
      res.gamma_colors[static_cast<size_t>(c)] = 0;
      return false;
    };
    if (!restore(0)) {
      if (reading == 'A') {
        reading = 'B';  // the ambiguous rule-5 interval: try the other reading
        bool again = restore(0);
        if (again) return res;
      }
      return fail("restoration", "vanished cluster-vertices cannot be colored");
    }
    return res;
  }

  static bool division_demands_ok(const PlanarSystem& sys, const std::vector<int>& gamma_colors) {
    auto colors_of = [&](int d) {
      std::set<int> cols;
      for (int c : sys.divisions[static_cast<size_t>(d)]) {
        int col = gamma_colors[static_cast<size_t>(c)];
        if (col > 0) cols.insert(col);
      }
      return cols;
    };
    for (size_t d = 0; d < sys.divisions.size(); ++d)
      if (static_cast<int>(colors_of(static_cast<int>(d)).size()) > 3) return false;
    for (const auto& [a, b, inc] : sys.demands) {
      auto ca = colors_of(a), cb = colors_of(b);
      bool complete = true;
      for (int c : sys.divisions[static_cast<size_t>(a)])
        if (gamma_colors[static_cast<size_t>(c)] == 0) complete = false;
      for (int c : sys.divisions[static_cast<size_t>(b)])
        if (gamma_colors[static_cast<size_t>(c)] == 0) complete = false;
      if (!complete) continue;
      bool nested = std::includes(ca.begin(), ca.end(), cb.begin(), cb.end()) ||
                    std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
      bool inconsistent = !nested;  // color sets map to collection sets by complement
      if (inc != inconsistent) return false;
    }
    return true;
  }

  // rule 5: u-cluster pairs in one division; when the gammas between (and,
  // under reading A, including) them use two colors, equal endpoint colors
  // demand consistent divisions and unequal ones inconsistent.  Checked on
  // the realized colors.
  static bool rule5_ok(const PlanarSystem& sys, const std::vector<int>& gamma_colors, char reading) {
    for (const auto& d : sys.divisions) {
      for (size_t a = 0; a < d.size(); ++a)
        for (size_t b = a + 1; b < d.size(); ++b) {
          int ga = gamma_colors[static_cast<size_t>(d[a])], gb = gamma_colors[static_cast<size_t>(d[b])];
          if (ga == 0 || gb == 0) continue;
          std::set<int> between;
          for (size_t k = a + (reading == 'B' ? 1 : 0); k <= b - (reading == 'B' ? 1 : 0) && k < d.size(); ++k)
            if (gamma_colors[static_cast<size_t>(d[k])] > 0) between.insert(gamma_colors[static_cast<size_t>(d[k])]);
          if (between.size() != 2) continue;
          // endpoints colored alike must both sit inside the two-color run
          if (ga == gb && !between.count(ga)) return false;
        }
    }
    return true;
  }
};

}  // namespace detail_p

inline PlanarColorResult planar_4color_attempt(const Graph& g, const Trace& boundary) {
  if (boundary.kind != Trace::Kind::planar_walk)
    throw std::invalid_argument("planar_4color_attempt: boundary must be a planar walk");
  if (g.vertex_count() <= 32) {
    auto mem = oracle::class_membership(g, oracle::GraphClass::planar);
    if (mem.decided() && !mem.member)
      throw std::invalid_argument("planar_4color_attempt: graph is not planar");
  }
  PlanarColorResult out;
  if (g.vertex_count() == 0) {
    out.assignment = ColorAssignment(4, {});
    return out;
  }
  detail_p::PlanarEngine engine;
  detail_p::PlanarSystem sys;
  sys.clusters.push_back(detail_p::Span{0, static_cast<int>(boundary.walk.size())});
  sys.divisions.push_back({0});
  auto got = engine.run(g, boundary.walk, sys, 0);
  if (!got) {
    out.failure = engine.fail_;
    return out;
  }
  ColorAssignment cl(4, got->vertex_colors);
  // validation: proper, <= 4 colors, boundary on <= 3 colors
  std::string why;
  if (!is_proper(g, cl))
    why = "improper";
  else {
    std::set<int> bcolors;
    for (int v : boundary.walk) bcolors.insert(cl.color(v));
    if (bcolors.size() > 3) why = "boundary uses four colors";
  }
  if (!why.empty()) {
    out.failure = FailureTrace{engine.peel_sequence, 0, "validation", why, engine.reading};
    return out;
  }
  out.assignment = cl;
  out.rule5_reading = engine.reading;
  return out;
}

}  // namespace minorlab
