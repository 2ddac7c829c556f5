// Color collections, cluster systems over traces, constraint graphs, and the
// constrained 3-coloring of wing-1 graphs (P4), including the appendix
// division coloring.  Two fixed modes: palette 3 / arity 2 for wing-1 work,
// palette 4 / arity 3 for the planar engine.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "minorlab/coloring.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/wing.hpp"

namespace minorlab {

// ---------------------------------------------------------------------------
// Collections: an l-subset of the palette stands for all of its
// arity-supersets; cardinality questions are asked after expansion.

struct Collection {
  int palette = 3;
  int arity = 2;
  VertexSet colors;  // sorted subset of {1..palette}, size <= arity
};

inline std::vector<Collection> expand_collection(const Collection& c) {
  if (static_cast<int>(c.colors.size()) > c.arity)
    throw std::invalid_argument("expand_collection: more colors than the arity allows");
  for (int col : c.colors)
    if (col < 1 || col > c.palette) throw std::invalid_argument("expand_collection: color outside palette");
  std::vector<Collection> out;
  std::function<void(int, VertexSet&)> go = [&](int next, VertexSet& cur) {
    if (static_cast<int>(cur.size()) == c.arity) {
      VertexSet sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(Collection{c.palette, c.arity, sorted});
      return;
    }
    for (int col = next; col <= c.palette; ++col) {
      if (std::find(cur.begin(), cur.end(), col) != cur.end()) continue;
      cur.push_back(col);
      go(col + 1, cur);
      cur.pop_back();
    }
  };
  VertexSet cur = c.colors;
  go(1, cur);
  std::sort(out.begin(), out.end(), [](const Collection& a, const Collection& b) { return a.colors < b.colors; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Collection& a, const Collection& b) { return a.colors == b.colors; }),
            out.end());
  return out;
}

// Consistency of two collection sets: inconsistent iff both expanded
// differences are nonempty.
inline bool consistent(const std::vector<Collection>& c1, const std::vector<Collection>& c2) {
  auto expand_all = [](const std::vector<Collection>& cs) {
    std::set<VertexSet> out;
    for (const auto& c : cs)
      for (const auto& e : expand_collection(c)) out.insert(e.colors);
    return out;
  };
  if (c1.empty() || c2.empty()) return true;
  if (c1.front().palette != c2.front().palette || c1.front().arity != c2.front().arity)
    throw std::invalid_argument("consistent: collection mode mismatch");
  auto a = expand_all(c1), b = expand_all(c2);
  bool a_minus_b = false, b_minus_a = false;
  for (const auto& x : a)
    if (!b.count(x)) a_minus_b = true;
  for (const auto& x : b)
    if (!a.count(x)) b_minus_a = true;
  return !(a_minus_b && b_minus_a);
}

// ---------------------------------------------------------------------------
// Constraint systems: ordered clusters over a trace, eq/neq relations, and
// division groupings.

struct Cluster {
  std::vector<int> vertices;  // contiguous run of the trace, may be empty
};

enum class Rel { eq, neq };

struct ConstraintSystem {
  enum class Mode { p3a2, p4a3 };
  Mode mode = Mode::p3a2;
  std::vector<Cluster> clusters;                  // in trace order
  std::vector<std::tuple<int, int, Rel>> relations;
  std::vector<std::vector<int>> divisions;        // runs of cluster ids, in order

  int palette() const { return mode == Mode::p3a2 ? 3 : 4; }
  int arity() const { return mode == Mode::p3a2 ? 2 : 3; }
};

namespace detail_ct {

// Match cluster vertex lists to contiguous runs of the trace, consecutive
// overlap at most one vertex, jointly covering the trace.
inline bool assign_runs(const std::vector<int>& trace, const std::vector<Cluster>& clusters,
                        std::vector<std::pair<int, int>>* runs_out, std::string* why) {
  const int L = static_cast<int>(trace.size());
  std::vector<std::pair<int, int>> runs;  // (start, len)
  int pos = 0;
  bool first_nonempty_seen = false;
  for (size_t i = 0; i < clusters.size(); ++i) {
    const auto& cl = clusters[i].vertices;
    if (cl.empty()) {
      runs.emplace_back(std::min(pos, L), 0);
      continue;
    }
    bool placed = false;
    for (int start : {pos, pos - 1}) {
      if (start < 0 || (start == pos - 1 && !first_nonempty_seen)) continue;
      if (start + static_cast<int>(cl.size()) > L) continue;
      bool match = true;
      for (size_t k = 0; k < cl.size(); ++k)
        if (trace[static_cast<size_t>(start) + k] != cl[k]) {
          match = false;
          break;
        }
      if (match) {
        runs.emplace_back(start, static_cast<int>(cl.size()));
        pos = start + static_cast<int>(cl.size());
        placed = true;
        first_nonempty_seen = true;
        break;
      }
    }
    if (!placed) {
      if (why) *why = "cluster " + std::to_string(i) + " is not a contiguous run of the trace";
      return false;
    }
  }
  if (pos != L) {
    if (why) *why = "clusters do not cover the trace";
    return false;
  }
  if (runs_out) *runs_out = runs;
  return true;
}

// Union-find over clusters by eq relations: the gamma classes.
inline std::vector<int> gamma_classes(const ConstraintSystem& cs) {
  std::vector<int> parent(cs.clusters.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  for (const auto& [i, j, r] : cs.relations)
    if (r == Rel::eq) {
      int a = find(i), b = find(j);
      if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<int> cls(cs.clusters.size());
  for (size_t i = 0; i < cs.clusters.size(); ++i) cls[i] = find(static_cast<int>(i));
  return cls;
}

}  // namespace detail_ct

// Structural validation: run continuity and coverage, relation shape
// (neighbors for p3a2, non-crossing for p4a3), mutual-neq bounds, division
// coverage and kinds, the on-a-vertex rule, and the K-division adjacency
// rule.  Empty result means valid.
inline std::vector<std::string> validate_system(const Graph& g, const std::vector<int>& trace,
                                                const ConstraintSystem& cs) {
  std::vector<std::string> out;
  const int nc = static_cast<int>(cs.clusters.size());
  std::vector<std::pair<int, int>> runs;
  std::string why;
  if (!detail_ct::assign_runs(trace, cs.clusters, &runs, &why)) {
    out.push_back(why);
    return out;
  }
  for (const auto& [i, j, r] : cs.relations) {
    if (i < 0 || j < 0 || i >= nc || j >= nc || i == j) {
      out.push_back("relation references a bad cluster id");
      return out;
    }
  }
  if (cs.mode == ConstraintSystem::Mode::p3a2) {
    for (const auto& [i, j, r] : cs.relations)
      if (std::abs(i - j) != 1) out.push_back("p3a2 relations must join neighbor clusters");
  } else {
    for (size_t a = 0; a < cs.relations.size(); ++a)
      for (size_t b = a + 1; b < cs.relations.size(); ++b) {
        auto [i1, j1, r1] = cs.relations[a];
        auto [i2, j2, r2] = cs.relations[b];
        int lo1 = std::min(i1, j1), hi1 = std::max(i1, j1);
        bool in1 = (i2 > lo1 && i2 < hi1), in2 = (j2 > lo1 && j2 < hi1);
        bool out1 = !in1 && i2 != lo1 && i2 != hi1, out2 = !in2 && j2 != lo1 && j2 != hi1;
        if ((in1 && out2) || (in2 && out1)) out.push_back("crossing constraints");
      }
  }
  // mutual-neq cliques: 3 in p3a2, 4 in p4a3, are unrepresentable
  {
    auto neq = [&](int a, int b) {
      for (const auto& [i, j, r] : cs.relations)
        if (r == Rel::neq && ((i == a && j == b) || (i == b && j == a))) return true;
      return false;
    };
    int bound = cs.mode == ConstraintSystem::Mode::p3a2 ? 3 : 4;
    std::function<bool(VertexSet&, int)> clique = [&](VertexSet& cur, int next) -> bool {
      if (static_cast<int>(cur.size()) == bound) return true;
      for (int c = next; c < nc; ++c) {
        bool ok = true;
        for (int m : cur)
          if (!neq(m, c)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(c);
        if (clique(cur, c + 1)) return true;
        cur.pop_back();
      }
      return false;
    };
    VertexSet cur;
    if (clique(cur, 0)) out.push_back("too many mutually different clusters");
  }
  // divisions: cover every cluster, contiguous runs, neighbor overlap <= 1
  {
    std::vector<char> covered(static_cast<size_t>(nc), 0);
    for (const auto& d : cs.divisions) {
      if (d.empty()) {
        out.push_back("empty division");
        continue;
      }
      for (size_t k = 0; k < d.size(); ++k) {
        if (d[k] < 0 || d[k] >= nc) {
          out.push_back("division references a bad cluster id");
          return out;
        }
        covered[static_cast<size_t>(d[k])] = 1;
        if (k > 0 && d[k] != d[k - 1] + 1) out.push_back("division is not a contiguous run");
      }
    }
    for (int c = 0; c < nc; ++c)
      if (!covered[static_cast<size_t>(c)]) out.push_back("cluster missing from all divisions");
    for (size_t a = 0; a + 1 < cs.divisions.size(); ++a) {
      VertexSet da(cs.divisions[a].begin(), cs.divisions[a].end());
      VertexSet db(cs.divisions[a + 1].begin(), cs.divisions[a + 1].end());
      VertexSet inter;
      std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(inter));
      if (inter.size() > 1) out.push_back("neighbor divisions overlap on more than one cluster");
    }
  }
  // all clusters on a vertex lie inside one division
  {
    std::map<int, VertexSet> on_vertex;
    for (int c = 0; c < nc; ++c)
      for (int v : cs.clusters[static_cast<size_t>(c)].vertices) on_vertex[v].push_back(c);
    for (auto& [v, cls] : on_vertex) {
      bool housed = false;
      for (const auto& d : cs.divisions) {
        bool all = true;
        for (int c : cls)
          if (std::find(d.begin(), d.end(), c) == d.end()) {
            all = false;
            break;
          }
        if (all) {
          housed = true;
          break;
        }
      }
      if (!housed) out.push_back("clusters on vertex " + std::to_string(v) + " span divisions");
    }
  }
  // K-division adjacency rule: an edge between vertices whose divisions are
  // both multi-gamma forces distinct (p4a3) / neighbor (p3a2) divisions
  {
    auto classes = detail_ct::gamma_classes(cs);
    auto division_of_vertex = [&](int v) -> int {
      // the division housing all clusters on v (validated above); -1 if v
      // carries no cluster
      VertexSet cls;
      for (int c = 0; c < nc; ++c)
        for (int w : cs.clusters[static_cast<size_t>(c)].vertices)
          if (w == v) cls.push_back(c);
      if (cls.empty()) return -1;
      for (size_t d = 0; d < cs.divisions.size(); ++d) {
        bool all = true;
        for (int c : cls)
          if (std::find(cs.divisions[d].begin(), cs.divisions[d].end(), c) == cs.divisions[d].end()) all = false;
        if (all) return static_cast<int>(d);
      }
      return -1;
    };
    // the division kind that rule 4 binds: K2 (two or more gammas) in the
    // wing mode, K3 (a gamma cycle) in the planar mode
    auto rule4_kind = [&](size_t d) {
      std::set<int> gs;
      for (int c : cs.divisions[d]) gs.insert(classes[static_cast<size_t>(c)]);
      if (cs.mode == ConstraintSystem::Mode::p3a2) return gs.size() >= 2;
      // cycle detection on the division's neq edges
      std::map<int, int> uf;
      for (int gcls : gs) uf[gcls] = gcls;
      std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
      };
      for (const auto& [i, j, r] : cs.relations) {
        if (r != Rel::neq) continue;
        bool i_in = std::find(cs.divisions[d].begin(), cs.divisions[d].end(), i) != cs.divisions[d].end();
        bool j_in = std::find(cs.divisions[d].begin(), cs.divisions[d].end(), j) != cs.divisions[d].end();
        if (!i_in || !j_in) continue;
        int a = find(classes[static_cast<size_t>(i)]), b = find(classes[static_cast<size_t>(j)]);
        if (a == b) return true;  // closing a cycle
        uf[a] = b;
      }
      return false;
    };
    for (auto [v1, v2] : g.edges()) {
      int d1 = division_of_vertex(v1), d2 = division_of_vertex(v2);
      if (d1 == -1 || d2 == -1) continue;
      if (!rule4_kind(static_cast<size_t>(d1)) || !rule4_kind(static_cast<size_t>(d2))) continue;
      if (d1 == d2)
        out.push_back("edge " + std::to_string(v1) + "-" + std::to_string(v2) +
                      " joins K divisions that coincide");
      else if (std::abs(d1 - d2) != 1)
        out.push_back("edge " + std::to_string(v1) + "-" + std::to_string(v2) +
                      " joins K divisions that are not neighbors");
    }
  }
  // neighbor divisions must each own a gamma the other lacks, or the
  // inconsistency demanded between their collection sets cannot hold
  {
    auto classes = detail_ct::gamma_classes(cs);
    auto gset = [&](const std::vector<int>& d) {
      std::set<int> out;
      for (int c : d) out.insert(classes[static_cast<size_t>(c)]);
      return out;
    };
    for (size_t d = 0; d + 1 < cs.divisions.size(); ++d) {
      auto a = gset(cs.divisions[d]), b = gset(cs.divisions[d + 1]);
      bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
      bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
      if (a_in_b || b_in_a)
        out.push_back("neighbor divisions " + std::to_string(d) + "," + std::to_string(d + 1) +
                      " have nested cluster-vertex sets");
    }
  }
  // a gamma class is one cluster-vertex: some division must hold all of it
  {
    auto classes = detail_ct::gamma_classes(cs);
    std::map<int, VertexSet> members;
    for (int c = 0; c < nc; ++c) members[classes[static_cast<size_t>(c)]].push_back(c);
    for (auto& [cls, mem] : members) {
      if (mem.size() <= 1) continue;
      bool housed = false;
      for (const auto& d : cs.divisions) {
        bool all = true;
        for (int c : mem)
          if (std::find(d.begin(), d.end(), c) == d.end()) all = false;
        if (all) housed = true;
      }
      if (!housed) out.push_back("a shared cluster-vertex is split across divisions");
    }
  }
  // a division's gammas must form a K1/K2 (p3a2: path) or K1/K2/K3
  // (p4a3: path or cycle) subdivision under the neq edges
  {
    auto classes = detail_ct::gamma_classes(cs);
    for (const auto& d : cs.divisions) {
      std::set<int> gs;
      for (int c : d) gs.insert(classes[static_cast<size_t>(c)]);
      std::map<int, int> deg;
      int edges = 0;
      for (const auto& [i, j, r] : cs.relations) {
        if (r != Rel::neq) continue;
        bool i_in = std::find(d.begin(), d.end(), i) != d.end();
        bool j_in = std::find(d.begin(), d.end(), j) != d.end();
        if (i_in && j_in && classes[static_cast<size_t>(i)] != classes[static_cast<size_t>(j)]) {
          ++deg[classes[static_cast<size_t>(i)]];
          ++deg[classes[static_cast<size_t>(j)]];
          ++edges;
        }
      }
      for (auto& [gcls, dg] : deg)
        if (dg > 2) out.push_back("division gamma structure branches");
      if (cs.mode == ConstraintSystem::Mode::p3a2 && edges >= static_cast<int>(gs.size()) && edges > 0)
        out.push_back("p3a2 division gamma structure has a cycle");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constraint graphs.

struct ConstraintGraph {
  Graph graph;   // base vertices 0..base_n-1, then one vertex per gamma class
  int base_n = 0;
  std::vector<int> gamma_of_cluster;  // cluster id -> graph vertex of its gamma
};

inline ConstraintGraph build_constraint_graph(const Graph& g, const std::vector<int>& trace,
                                              const ConstraintSystem& cs) {
  auto violations = validate_system(g, trace, cs);
  if (!violations.empty())
    throw std::invalid_argument("build_constraint_graph: invalid system: " + violations.front());
  auto classes = detail_ct::gamma_classes(cs);
  std::map<int, int> class_vertex;
  int next = g.vertex_count();
  for (size_t c = 0; c < cs.clusters.size(); ++c)
    if (!class_vertex.count(classes[c])) class_vertex[classes[c]] = next++;
  auto edges = g.edges();
  std::set<std::pair<int, int>> extra;
  for (size_t c = 0; c < cs.clusters.size(); ++c) {
    int gv = class_vertex[classes[c]];
    for (int v : cs.clusters[c].vertices) extra.insert({std::min(v, gv), std::max(v, gv)});
  }
  for (const auto& [i, j, r] : cs.relations)
    if (r == Rel::neq) {
      int a = class_vertex[classes[static_cast<size_t>(i)]], b = class_vertex[classes[static_cast<size_t>(j)]];
      if (a != b) extra.insert({std::min(a, b), std::max(a, b)});
    }
  for (auto& e : extra) edges.push_back(e);
  ConstraintGraph out;
  out.graph = Graph(next, edges);
  out.base_n = g.vertex_count();
  out.gamma_of_cluster.resize(cs.clusters.size());
  for (size_t c = 0; c < cs.clusters.size(); ++c) out.gamma_of_cluster[c] = class_vertex[classes[c]];
  return out;
}

// ---------------------------------------------------------------------------
// Independent satisfaction checker: properness on the constraint graph plus
// the division rules realized by the gamma colors.

inline std::vector<std::string> check_constraint_solution(const Graph& g, const std::vector<int>& trace,
                                                          const ConstraintSystem& cs,
                                                          const ColorAssignment& cl) {
  std::vector<std::string> out;
  ConstraintGraph ct = build_constraint_graph(g, trace, cs);
  if (static_cast<int>(cl.colors.size()) != ct.graph.vertex_count() || !cl.total()) {
    out.push_back("assignment does not cover the constraint graph");
    return out;
  }
  if (cl.palette > cs.palette()) out.push_back("palette too large for the mode");
  for (int v = 0; v < ct.graph.vertex_count(); ++v)
    if (cl.color(v) < 1 || cl.color(v) > cs.palette()) out.push_back("color outside palette");
  for (auto [u, v] : ct.graph.edges())
    if (cl.color(u) == cl.color(v)) {
      out.push_back("improper edge " + std::to_string(u) + "-" + std::to_string(v));
      return out;
    }
  // divisions: collection sets realized by gamma colors
  auto division_collections = [&](const std::vector<int>& d) {
    std::set<int> colors;
    for (int c : d) colors.insert(cl.color(ct.gamma_of_cluster[static_cast<size_t>(c)]));
    std::vector<Collection> sets;
    for (int gc : colors) {
      VertexSet rest;
      for (int col = 1; col <= cs.palette(); ++col)
        if (col != gc) rest.push_back(col);
      sets.push_back(Collection{cs.palette(), cs.arity(), rest});
    }
    return sets;
  };
  int limit = cs.arity() == 2 ? 2 : 3;
  for (size_t d = 0; d < cs.divisions.size(); ++d) {
    auto sets = division_collections(cs.divisions[d]);
    if (static_cast<int>(sets.size()) > limit)
      out.push_back("division " + std::to_string(d) + " uses too many collections");
  }
  for (size_t d = 0; d + 1 < cs.divisions.size(); ++d) {
    auto a = division_collections(cs.divisions[d]);
    auto b = division_collections(cs.divisions[d + 1]);
    if (consistent(a, b))
      out.push_back("neighbor divisions " + std::to_string(d) + "," + std::to_string(d + 1) +
                    " have consistent collection sets");
  }
  return out;
}

// Brute-force satisfiability of a system: some proper palette-coloring of the
// constraint graph meets the division rules.  Desk-scale cross-check.
inline bool constraint_system_satisfiable(const Graph& g, const std::vector<int>& trace,
                                          const ConstraintSystem& cs, int size_cap = 16) {
  ConstraintGraph ct = build_constraint_graph(g, trace, cs);
  if (ct.graph.vertex_count() > size_cap) throw budget_error("constraint_system_satisfiable: beyond cap");
  bool sat = false;
  oracle::enumerate_colorings(
      ct.graph, cs.palette(),
      [&](const ColorAssignment& cl) {
        ColorAssignment full(cs.palette(), cl.colors);
        if (check_constraint_solution(g, trace, cs, full).empty()) {
          sat = true;
          return false;
        }
        return true;
      },
      size_cap);
  return sat;
}

}  // namespace minorlab

namespace minorlab {

// ---------------------------------------------------------------------------
// Constrained 3-coloring of wing-1 graphs (P4's regularity theorem): peel the
// last line vertex, inherit the system, color the rest, then restore.  The
// returned assignment colors the constraint graph (base vertices first, then
// gamma classes in build_constraint_graph order).

struct InternalFailure {
  int level = 0;
  std::vector<int> peel_sequence;
  std::string reason;
};

struct WingSolveResult {
  std::optional<ColorAssignment> assignment;  // on the constraint graph
  std::optional<InternalFailure> failure;
  bool ok() const { return assignment.has_value(); }
};

namespace detail_ct {

inline ConstraintGraph build_ct_unchecked(const Graph& g, const ConstraintSystem& cs) {
  auto classes = gamma_classes(cs);
  std::map<int, int> class_vertex;
  int next = g.vertex_count();
  for (size_t c = 0; c < cs.clusters.size(); ++c)
    if (!class_vertex.count(classes[c])) class_vertex[classes[c]] = next++;
  auto edges = g.edges();
  std::set<std::pair<int, int>> extra;
  for (size_t c = 0; c < cs.clusters.size(); ++c) {
    int gv = class_vertex[classes[c]];
    for (int v : cs.clusters[c].vertices) extra.insert({std::min(v, gv), std::max(v, gv)});
  }
  for (const auto& [i, j, r] : cs.relations)
    if (r == Rel::neq) {
      int a = class_vertex[classes[static_cast<size_t>(i)]], b = class_vertex[classes[static_cast<size_t>(j)]];
      if (a != b) extra.insert({std::min(a, b), std::max(a, b)});
    }
  for (auto& e : extra) edges.push_back(e);
  ConstraintGraph out;
  out.graph = Graph(next, edges);
  out.base_n = g.vertex_count();
  out.gamma_of_cluster.resize(cs.clusters.size());
  for (size_t c = 0; c < cs.clusters.size(); ++c) out.gamma_of_cluster[c] = class_vertex[classes[c]];
  return out;
}

// Division-rule check against partially known gamma colors; -1 = free.
inline bool division_rules_hold(const ConstraintSystem& cs, const std::vector<int>& gamma_color,
                                bool neighbor_rule = true) {
  int limit = cs.arity();
  auto colors_of = [&](const std::vector<int>& d) {
    std::set<int> cols;
    for (int c : d) {
      int col = gamma_color[static_cast<size_t>(c)];
      if (col > 0) cols.insert(col);
    }
    return cols;
  };
  for (const auto& d : cs.divisions)
    if (static_cast<int>(colors_of(d).size()) > limit) return false;
  if (!neighbor_rule) return true;
  for (size_t d = 0; d + 1 < cs.divisions.size(); ++d) {
    auto a = colors_of(cs.divisions[d]);
    auto b = colors_of(cs.divisions[d + 1]);
    bool complete = true;
    for (int c : cs.divisions[d])
      if (gamma_color[static_cast<size_t>(c)] <= 0) complete = false;
    for (int c : cs.divisions[d + 1])
      if (gamma_color[static_cast<size_t>(c)] <= 0) complete = false;
    if (!complete) continue;  // only judge fully colored neighbor pairs
    // gamma-color sets map to collection sets by complementation, which
    // reverses inclusion: consistent collections <=> nested color sets
    bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
    bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
    if (a_in_b || b_in_a) return false;
  }
  return true;
}

struct WingSolver {
  std::vector<int> peel_sequence;  // first descent, for failure reports
  std::int64_t budget = 40'000'000;

  // Enumerates proper assignments of the level's constraint graph in the
  // induction's order: peel the last line vertex, inherit the system, take
  // each child solution, and complete it over the vanished cluster-vertices.
  // Assignments meeting the inherited division bookkeeping come first.
  // `yield` returns true to accept and stop.
  bool solve(const Graph& g, const std::vector<int>& order, const std::vector<int>& trace,
             const ConstraintSystem& cs, int level,
             const std::function<bool(const ColorAssignment&)>& yield) {
    const int n = g.vertex_count();
    const int nc = static_cast<int>(cs.clusters.size());
    if (--budget < 0) return false;

    if (n == 1) {
      auto classes = gamma_classes(cs);
      std::vector<int> reps;
      for (size_t c = 0; c < cs.clusters.size(); ++c)
        if (classes[c] == static_cast<int>(c)) reps.push_back(static_cast<int>(c));
      ConstraintGraph ct = build_ct_unchecked(g, cs);
      std::vector<int> colors(static_cast<size_t>(ct.graph.vertex_count()), 0);
      auto gamma_colors = [&] {
        std::vector<int> gcol(static_cast<size_t>(nc), 0);
        for (int c = 0; c < nc; ++c)
          gcol[static_cast<size_t>(c)] = colors[static_cast<size_t>(ct.gamma_of_cluster[static_cast<size_t>(c)])];
        return gcol;
      };
      for (int pass = 0; pass < 2; ++pass) {
        bool stop = false;
        std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
          if (--budget < 0) return true;
          if (idx == reps.size()) {
            for (auto [u2, v2] : ct.graph.edges())
              if (colors[static_cast<size_t>(u2)] == colors[static_cast<size_t>(v2)]) return false;
            bool per_rules = division_rules_hold(cs, gamma_colors());
            if ((pass == 0) != per_rules) return false;  // rules-first ordering, no duplicates
            stop = yield(ColorAssignment(cs.palette(), colors));
            return stop;
          }
          int gv = ct.gamma_of_cluster[static_cast<size_t>(reps[idx])];
          for (int c = 1; c <= cs.palette(); ++c) {
            colors[static_cast<size_t>(gv)] = c;
            if (assign(idx + 1)) return true;
          }
          colors[static_cast<size_t>(gv)] = 0;
          return false;
        };
        for (int vcol = 1; vcol <= cs.palette() && !stop; ++vcol) {
          colors[0] = vcol;
          if (assign(0)) break;
        }
        if (stop) return true;
        if (budget < 0) return false;
      }
      return false;
    }

    const int vn = order.back();
    if (static_cast<int>(peel_sequence.size()) == level) peel_sequence.push_back(vn);
    // the designated trace may be a sub-series of the outer vertices; if the
    // peeled vertex is on it, it is necessarily its last member
    const bool on_trace = !trace.empty() && trace.back() == vn;
    if (!on_trace && std::find(trace.begin(), trace.end(), vn) != trace.end()) return false;
    std::vector<int> base_trace(trace.begin(), on_trace ? trace.end() - 1 : trace.end());

    // newly exposed vertices, in line order, all after the old trace members
    std::vector<int> qs;
    for (int p = 0; p + 1 < n; ++p) {
      int v = order[static_cast<size_t>(p)];
      if (g.has_edge(v, vn) && std::find(trace.begin(), trace.end(), v) == trace.end()) qs.push_back(v);
    }
    std::vector<int> new_trace = base_trace;
    new_trace.insert(new_trace.end(), qs.begin(), qs.end());

    // inherited clusters: drop {vn} clusters, trim vn elsewhere, append the
    // neighborhood cluster at the tail
    std::vector<int> old_to_new(static_cast<size_t>(nc), -1);
    std::vector<int> vanished;
    ConstraintSystem cs2;
    cs2.mode = cs.mode;
    std::vector<int> strict_containers;
    for (int c = 0; c < nc; ++c) {
      auto verts = cs.clusters[static_cast<size_t>(c)].vertices;
      bool has_vn = !verts.empty() && verts.back() == vn;
      if (has_vn && verts.size() == 1) {
        vanished.push_back(c);
        continue;
      }
      if (has_vn) {
        verts.pop_back();
        strict_containers.push_back(c);
      }
      old_to_new[static_cast<size_t>(c)] = static_cast<int>(cs2.clusters.size());
      cs2.clusters.push_back(Cluster{verts});
    }
    Cluster neigh;
    int u2 = base_trace.empty() ? -1 : base_trace.back();
    if (u2 != -1 && g.has_edge(u2, vn)) neigh.vertices.push_back(u2);
    for (int q : qs) neigh.vertices.push_back(q);
    int new_id = static_cast<int>(cs2.clusters.size());
    cs2.clusters.push_back(neigh);

    // relations among survivors, plus the theorem's additions: the new
    // cluster differs from every cluster that strictly contained vn and from
    // every survivor sharing a gamma with a vanished cluster
    auto classes = gamma_classes(cs);
    for (const auto& [i, j, r] : cs.relations) {
      int a = old_to_new[static_cast<size_t>(i)], b = old_to_new[static_cast<size_t>(j)];
      if (a != -1 && b != -1) cs2.relations.emplace_back(a, b, r);
    }
    std::set<int> forced_neq;
    for (int c : strict_containers) forced_neq.insert(old_to_new[static_cast<size_t>(c)]);
    for (int c = 0; c < nc; ++c) {
      if (old_to_new[static_cast<size_t>(c)] == -1) continue;
      for (int d : vanished)
        if (classes[static_cast<size_t>(c)] == classes[static_cast<size_t>(d)])
          forced_neq.insert(old_to_new[static_cast<size_t>(c)]);
    }
    for (int c : forced_neq) cs2.relations.emplace_back(c, new_id, Rel::neq);

    // divisions: map survivors; the flip rule decides where the new cluster
    // goes (same division in G -> separate in G', and vice versa).  These
    // only order the search below this level.
    int d_vn = -1;
    {
      std::set<int> on_vn(vanished.begin(), vanished.end());
      for (int c : strict_containers) on_vn.insert(c);
      if (!on_vn.empty())
        for (size_t d = 0; d < cs.divisions.size(); ++d) {
          bool all = true;
          for (int c : on_vn)
            if (std::find(cs.divisions[d].begin(), cs.divisions[d].end(), c) == cs.divisions[d].end()) all = false;
          if (all) d_vn = static_cast<int>(d);
        }
    }
    int last_surviving_div = -1;
    for (size_t d = 0; d < cs.divisions.size(); ++d) {
      std::vector<int> mem;
      for (int c : cs.divisions[d])
        if (old_to_new[static_cast<size_t>(c)] != -1) mem.push_back(old_to_new[static_cast<size_t>(c)]);
      if (!mem.empty()) {
        cs2.divisions.push_back(mem);
        last_surviving_div = static_cast<int>(d);
      }
    }
    if (cs2.divisions.empty())
      cs2.divisions.push_back({new_id});
    else if (d_vn != -1 && d_vn == last_surviving_div)
      cs2.divisions.push_back({new_id});
    else
      cs2.divisions.back().push_back(new_id);

    // recurse on the graph minus vn
    auto del = apply_minor_action(g, MinorAction::del_vertex(vn));
    std::vector<int> order2, trace2;
    for (int p = 0; p + 1 < n; ++p) order2.push_back(del.relabel[static_cast<size_t>(order[static_cast<size_t>(p)])]);
    for (int v : new_trace) trace2.push_back(del.relabel[static_cast<size_t>(v)]);
    ConstraintSystem cs3 = cs2;
    for (auto& cl : cs3.clusters)
      for (int& v : cl.vertices) v = del.relabel[static_cast<size_t>(v)];

    ConstraintGraph ct = build_ct_unchecked(g, cs);
    ConstraintGraph ct2 = build_ct_unchecked(del.graph, cs3);

    return solve(del.graph, order2, trace2, cs3, level + 1, [&](const ColorAssignment& sub) -> bool {
      // restore: base vertices map back, vn takes its gamma color, surviving
      // gamma classes keep their colors, vanished-only classes are searched
      std::vector<int> colors(static_cast<size_t>(ct.graph.vertex_count()), 0);
      for (int v = 0; v < n; ++v)
        if (v != vn) colors[static_cast<size_t>(v)] = sub.color(del.relabel[static_cast<size_t>(v)]);
      colors[static_cast<size_t>(vn)] = sub.color(ct2.gamma_of_cluster[static_cast<size_t>(new_id)]);
      std::vector<int> restore_targets;
      for (int c = 0; c < nc; ++c) {
        int gv = ct.gamma_of_cluster[static_cast<size_t>(c)];
        if (colors[static_cast<size_t>(gv)] != 0) continue;
        if (old_to_new[static_cast<size_t>(c)] != -1) {
          colors[static_cast<size_t>(gv)] =
              sub.color(ct2.gamma_of_cluster[static_cast<size_t>(old_to_new[static_cast<size_t>(c)])]);
        } else if (std::find(restore_targets.begin(), restore_targets.end(), gv) == restore_targets.end()) {
          restore_targets.push_back(gv);
        }
      }
      auto proper_here = [&](int gv) {
        for (int w : ct.graph.neighbors(gv))
          if (colors[static_cast<size_t>(w)] != 0 && colors[static_cast<size_t>(w)] == colors[static_cast<size_t>(gv)])
            return false;
        return true;
      };
      auto gamma_colors = [&] {
        std::vector<int> gcol(static_cast<size_t>(nc), 0);
        for (int c = 0; c < nc; ++c)
          gcol[static_cast<size_t>(c)] = colors[static_cast<size_t>(ct.gamma_of_cluster[static_cast<size_t>(c)])];
        return gcol;
      };
      for (int pass = 0; pass < 2; ++pass) {
        bool stop = false;
        std::function<bool(size_t)> restore = [&](size_t idx) -> bool {
          if (--budget < 0) return true;
          if (idx == restore_targets.size()) {
            bool per_rules = division_rules_hold(cs, gamma_colors());
            if ((pass == 0) != per_rules) return false;
            stop = yield(ColorAssignment(cs.palette(), colors));
            return stop;
          }
          int gv = restore_targets[idx];
          for (int c = 1; c <= cs.palette(); ++c) {
            colors[static_cast<size_t>(gv)] = c;
            if (proper_here(gv) && restore(idx + 1)) return true;
          }
          colors[static_cast<size_t>(gv)] = 0;
          return false;
        };
        restore(0);
        if (stop) return true;
        if (budget < 0) return false;
      }
      return false;
    });
  }
};

}  // namespace detail_ct

// The designated trace of a system over a wing embedding: the union of the
// cluster vertex lists in line order; every member must be an outer vertex.
inline std::vector<int> derived_trace(const WingEmbedding& w, const ConstraintSystem& cs) {
  std::set<int> used;
  for (const auto& c : cs.clusters)
    for (int v : c.vertices) used.insert(v);
  auto info = outer_vertices(w);
  std::set<int> outer(info.outer.begin(), info.outer.end());
  for (int v : used)
    if (!outer.count(v))
      throw std::invalid_argument("constraint system touches a non-outer vertex");
  std::vector<int> trace;
  for (int v : info.outer)
    if (used.count(v)) trace.push_back(v);
  return trace;
}

inline WingSolveResult solve_wing1_constraints(const WingEmbedding& w, const ConstraintSystem& cs) {
  if (cs.mode != ConstraintSystem::Mode::p3a2)
    throw std::invalid_argument("solve_wing1_constraints: wing mode is palette 3 / arity 2");
  auto trace = derived_trace(w, cs);
  auto violations = validate_system(w.graph, trace, cs);
  if (!violations.empty())
    throw std::invalid_argument("solve_wing1_constraints: invalid system: " + violations.front());
  if (w.graph.vertex_count() == 0) {
    WingSolveResult res;
    res.assignment = ColorAssignment(3, {});
    return res;
  }
  detail_ct::WingSolver solver;
  WingSolveResult res;
  bool accepted = solver.solve(w.graph, w.order, trace, cs, 0, [&](const ColorAssignment& cl) {
    if (!check_constraint_solution(w.graph, trace, cs, cl).empty()) return false;
    res.assignment = cl;
    return true;
  });
  if (!accepted) {
    res.failure = InternalFailure{
        0, solver.peel_sequence,
        solver.budget < 0 ? "search budget exhausted" : "no reachable assignment satisfies the system"};
  }
  return res;
}

}  // namespace minorlab

namespace minorlab {

// ---------------------------------------------------------------------------
// Division coloring (P4 appendix): a 3-coloring in which an independent
// I ⊆ R is monochromatic and R \ I takes the other two colors, built by
// peeling a degree <= 2 vertex.  R must induce a K2 division (path) or a K3
// division (cycle).

namespace detail_ct {

inline Graph with_edge(const Graph& g, int a, int b) {
  auto e = g.edges();
  if (!g.has_edge(a, b)) e.emplace_back(a, b);
  return Graph(g.vertex_count(), e);
}

inline VertexSet map_set(const VertexSet& s, const std::vector<int>& relabel) {
  std::set<int> out;
  for (int v : s)
    if (relabel[static_cast<size_t>(v)] != -1) out.insert(relabel[static_cast<size_t>(v)]);
  return VertexSet(out.begin(), out.end());
}

struct DivisionColorer {
  // returns a 3-coloring of g; I monochromatic, R \ I on the other colors
  std::optional<ColorAssignment> solve(const Graph& g, std::vector<int> order, VertexSet r, VertexSet i) {
    const int n = g.vertex_count();
    if (n == 0) return ColorAssignment(3, {});
    if (n == 1) return ColorAssignment(3, {1});

    WingEmbedding w{order, g};
    int v = find_low_degree(w);
    auto in = [](const VertexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); };
    auto icolor_of = [&](const ColorAssignment& cl, const VertexSet& iset) -> int {
      return iset.empty() ? 0 : cl.color(iset.front());
    };
    auto colors_of = [&](const ColorAssignment& cl, const VertexSet& s) {
      std::set<int> cols;
      for (int x : s) cols.insert(cl.color(x));
      return cols;
    };

    auto recurse_delete = [&](int dv, VertexSet r2, VertexSet i2, bool join_neighbors)
        -> std::optional<std::pair<ColorAssignment, ApplyResult>> {
      Graph base = g;
      if (join_neighbors) {
        auto nb = g.neighbors(dv);
        if (nb.size() == 2) base = with_edge(g, nb[0], nb[1]);
      }
      auto del = apply_minor_action(base, MinorAction::del_vertex(dv));
      std::vector<int> order2;
      for (int x : order)
        if (x != dv) order2.push_back(del.relabel[static_cast<size_t>(x)]);
      if (!is_wing1(order2, del.graph)) {
        auto rebuilt = build_wing1(del.graph);
        if (!rebuilt.ok()) return std::nullopt;
        order2 = rebuilt.embedding->order;
      }
      auto sub = solve(del.graph, order2, map_set(r2, del.relabel), map_set(i2, del.relabel));
      if (!sub) return std::nullopt;
      return std::pair{*sub, del};
    };

    auto lift_delete = [&](const ColorAssignment& sub, const ApplyResult& del) {
      ColorAssignment cl(3, std::vector<int>(static_cast<size_t>(n), 0));
      for (int x = 0; x < n; ++x)
        if (del.relabel[static_cast<size_t>(x)] != -1) cl.colors[static_cast<size_t>(x)] = sub.color(del.relabel[static_cast<size_t>(x)]);
      return cl;
    };

    if (!in(r, v)) {
      // outside vertex: peel, restore with any free color
      VertexSet r2 = r, i2 = i;
      auto got = recurse_delete(v, r2, i2, false);
      if (!got) return std::nullopt;
      auto cl = lift_delete(got->first, got->second);
      for (int c = 1; c <= 3; ++c) {
        bool ok = true;
        for (int wv : g.neighbors(v))
          if (cl.color(wv) == c) ok = false;
        if (ok) {
          cl.colors[static_cast<size_t>(v)] = c;
          return cl;
        }
      }
      return std::nullopt;
    }

    auto nb = g.neighbors(v);
    const bool on_cycle = [&] {  // v's induced R-degree is 2 with no chord
      int deg_r = 0;
      for (int x : nb)
        if (in(r, x)) ++deg_r;
      return deg_r == 2;
    }();

    if (nb.size() <= 1 || !on_cycle) {
      // path endpoint or a loosely attached member: peel and restore
      VertexSet r2, i2;
      for (int x : r)
        if (x != v) r2.push_back(x);
      for (int x : i)
        if (x != v) i2.push_back(x);
      auto got = recurse_delete(v, r2, i2, false);
      if (!got) return std::nullopt;
      auto cl = lift_delete(got->first, got->second);
      int icol = icolor_of(cl, map_set(i2, got->second.relabel).empty() ? VertexSet{} : i2);
      if (!i2.empty()) icol = cl.color(i2.front());
      auto rcols = colors_of(cl, r2);
      for (int c = 1; c <= 3; ++c) {
        bool ok = true;
        for (int wv : g.neighbors(v))
          if (cl.color(wv) == c) ok = false;
        if (!ok) continue;
        if (in(i, v)) {
          if (!i2.empty() && c != icol) continue;
          if (i2.empty() && rcols.count(c)) continue;  // fresh mono color
        } else {
          if (!i.empty() && !i2.empty() && c == icol) continue;
          auto rni = rcols;
          if (!i2.empty()) rni.erase(icol);
          rni.insert(c);
          if (rni.size() > 2) continue;
        }
        cl.colors[static_cast<size_t>(v)] = c;
        return cl;
      }
      return std::nullopt;
    }

    // v has two R-neighbors v1, v2
    int v1 = -1, v2 = -1;
    for (int x : nb)
      if (in(r, x)) (v1 == -1 ? v1 : v2) = x;

    if (in(i, v) && i.size() == 1) {
      // lone mono vertex: peel it, color the rest with two colors, give v
      // the third
      VertexSet r2;
      for (int x : r)
        if (x != v) r2.push_back(x);
      auto got = recurse_delete(v, r2, {}, false);
      if (!got) return std::nullopt;
      auto cl = lift_delete(got->first, got->second);
      auto rcols = colors_of(cl, r2);
      for (int c = 1; c <= 3; ++c) {
        if (rcols.count(c)) continue;
        bool ok = true;
        for (int wv : g.neighbors(v))
          if (cl.color(wv) == c) ok = false;
        if (ok) {
          cl.colors[static_cast<size_t>(v)] = c;
          return cl;
        }
      }
      return std::nullopt;
    }

    if (in(i, v) || (!in(i, v1) && !in(i, v2))) {
      // appendix case (a): contract {v,v1,v2} into one vertex
      auto c1 = apply_minor_action(g, MinorAction::contract(v, v1));
      int mv = c1.relabel[static_cast<size_t>(v)];
      int mv2 = c1.relabel[static_cast<size_t>(v2)];
      auto c2 = apply_minor_action(c1.graph, MinorAction::contract(mv, mv2));
      std::vector<int> relabel(static_cast<size_t>(n), -1);
      for (int x = 0; x < n; ++x)
        if (c1.relabel[static_cast<size_t>(x)] != -1)
          relabel[static_cast<size_t>(x)] = c2.relabel[static_cast<size_t>(c1.relabel[static_cast<size_t>(x)])];
      int merged = relabel[static_cast<size_t>(v)];
      VertexSet r2, i2;
      {
        std::set<int> rs, is;
        for (int x : r)
          if (x != v && x != v1 && x != v2) rs.insert(relabel[static_cast<size_t>(x)]);
        rs.insert(merged);
        for (int x : i)
          if (x != v) is.insert(relabel[static_cast<size_t>(x)]);
        r2.assign(rs.begin(), rs.end());
        i2.assign(is.begin(), is.end());
      }
      auto rebuilt = build_wing1(c2.graph);
      if (!rebuilt.ok()) return std::nullopt;
      auto sub = solve(c2.graph, rebuilt.embedding->order, r2, i2);
      if (!sub) return std::nullopt;
      ColorAssignment cl(3, std::vector<int>(static_cast<size_t>(n), 0));
      for (int x = 0; x < n; ++x)
        if (x != v && x != v1 && x != v2) cl.colors[static_cast<size_t>(x)] = sub->color(relabel[static_cast<size_t>(x)]);
      int mc = sub->color(merged);
      cl.colors[static_cast<size_t>(v1)] = mc;
      cl.colors[static_cast<size_t>(v2)] = mc;
      int icol = i2.empty() ? 0 : sub->color(i2.front());
      for (int c = 1; c <= 3; ++c) {
        if (c == mc) continue;
        if (in(i, v) && icol != 0 && c != icol) continue;
        if (!in(i, v) && icol != 0 && c == icol) continue;
        bool ok = true;
        for (int wv : g.neighbors(v))
          if (wv != v1 && wv != v2 && cl.color(wv) == c) ok = false;
        if (!ok) continue;
        cl.colors[static_cast<size_t>(v)] = c;
        return cl;
      }
      return std::nullopt;
    }

    if (in(i, v1) && in(i, v2)) {
      // appendix case (b): same contraction, merged vertex joins I
      auto c1 = apply_minor_action(g, MinorAction::contract(v, v1));
      auto c2 = apply_minor_action(c1.graph, MinorAction::contract(c1.relabel[static_cast<size_t>(v)],
                                                                   c1.relabel[static_cast<size_t>(v2)]));
      std::vector<int> relabel(static_cast<size_t>(n), -1);
      for (int x = 0; x < n; ++x)
        if (c1.relabel[static_cast<size_t>(x)] != -1)
          relabel[static_cast<size_t>(x)] = c2.relabel[static_cast<size_t>(c1.relabel[static_cast<size_t>(x)])];
      int merged = relabel[static_cast<size_t>(v)];
      std::set<int> rs, is;
      for (int x : r)
        if (x != v && x != v1 && x != v2) rs.insert(relabel[static_cast<size_t>(x)]);
      rs.insert(merged);
      is.insert(merged);
      for (int x : i)
        if (x != v1 && x != v2) is.insert(relabel[static_cast<size_t>(x)]);
      auto rebuilt = build_wing1(c2.graph);
      if (!rebuilt.ok()) return std::nullopt;
      auto sub = solve(c2.graph, rebuilt.embedding->order, VertexSet(rs.begin(), rs.end()),
                       VertexSet(is.begin(), is.end()));
      if (!sub) return std::nullopt;
      ColorAssignment cl(3, std::vector<int>(static_cast<size_t>(n), 0));
      for (int x = 0; x < n; ++x)
        if (x != v && x != v1 && x != v2) cl.colors[static_cast<size_t>(x)] = sub->color(relabel[static_cast<size_t>(x)]);
      int mc = sub->color(merged);  // the mono color
      cl.colors[static_cast<size_t>(v1)] = mc;
      cl.colors[static_cast<size_t>(v2)] = mc;
      for (int c = 1; c <= 3; ++c) {
        if (c == mc) continue;
        bool ok = true;
        for (int wv : g.neighbors(v))
          if (wv != v1 && wv != v2 && cl.color(wv) == c) ok = false;
        if (ok) {
          cl.colors[static_cast<size_t>(v)] = c;
          return cl;
        }
      }
      return std::nullopt;
    }

    // appendix case (c): exactly one neighbor in I; peel v and join v1-v2
    {
      VertexSet r2, i2 = i;
      for (int x : r)
        if (x != v) r2.push_back(x);
      auto got = recurse_delete(v, r2, i2, true);
      if (!got) return std::nullopt;
      auto cl = lift_delete(got->first, got->second);
      int c1 = cl.color(v1), c2 = cl.color(v2);
      for (int c = 1; c <= 3; ++c) {
        if (c == c1 || c == c2) continue;
        bool ok = true;
        for (int wv : g.neighbors(v))
          if (cl.color(wv) == c) ok = false;
        if (ok) {
          cl.colors[static_cast<size_t>(v)] = c;
          return cl;
        }
      }
      return std::nullopt;
    }
  }
};

}  // namespace detail_ct

// Validates the precondition structure and runs the appendix induction.
inline ColorAssignment solve_division_coloring(const WingEmbedding& w, const VertexRelatedSet& r, int x,
                                               const VertexSet& i) {
  const Graph& g = w.graph;
  VertexSet rs = r.members;
  std::sort(rs.begin(), rs.end());
  if (rs.empty()) throw std::invalid_argument("solve_division_coloring: empty R");
  for (int v : i)
    if (!std::binary_search(rs.begin(), rs.end(), v))
      throw std::invalid_argument("solve_division_coloring: I must sit inside R");
  for (size_t a = 0; a < i.size(); ++a)
    for (size_t b = a + 1; b < i.size(); ++b)
      if (g.has_edge(i[a], i[b])) throw std::invalid_argument("solve_division_coloring: I is not independent");
  // structure: path for x=2, cycle for x=3
  auto ind = induced_subgraph(g, rs);
  const int rn = ind.graph.vertex_count();
  int deg1 = 0, deg2 = 0, other = 0;
  for (int v = 0; v < rn; ++v) {
    int d = ind.graph.degree(v);
    if (d <= 1)
      ++deg1;
    else if (d == 2)
      ++deg2;
    else
      ++other;
  }
  bool path_like = other == 0 && is_connected(ind.graph) && ind.graph.edge_count() == rn - 1;
  bool cycle_like = other == 0 && rn >= 3 && is_connected(ind.graph) && ind.graph.edge_count() == rn && deg1 == 0;
  if (x == 2 && !path_like) throw std::invalid_argument("solve_division_coloring: R is not a K2 division");
  if (x == 3 && !cycle_like) throw std::invalid_argument("solve_division_coloring: R is not a K3 division");
  if (x != 2 && x != 3) throw std::invalid_argument("solve_division_coloring: x must be 2 or 3");
  if (x == 3 && rs.size() % 2 == 1 && i.empty())
    throw std::domain_error("solve_division_coloring: odd K3 division needs a nonempty I");

  detail_ct::DivisionColorer dc;
  auto got = dc.solve(g, w.order, rs, i);
  if (!got) throw std::runtime_error("solve_division_coloring: induction blocked (archive as a finding)");
  // validate: proper, I monochromatic, R \ I on the other two colors
  if (!is_proper(g, *got)) throw std::runtime_error("solve_division_coloring: produced an improper coloring");
  std::set<int> icols, rcols;
  for (int v : i) icols.insert(got->color(v));
  for (int v : rs)
    if (!std::binary_search(i.begin(), i.end(), v)) rcols.insert(got->color(v));
  if (icols.size() > 1) throw std::runtime_error("solve_division_coloring: I is not monochromatic");
  if (!icols.empty() && rcols.count(*icols.begin()))
    throw std::runtime_error("solve_division_coloring: R \\ I reuses the mono color");
  if (rcols.size() > 2) throw std::runtime_error("solve_division_coloring: R \\ I uses three colors");
  return *got;
}

}  // namespace minorlab
