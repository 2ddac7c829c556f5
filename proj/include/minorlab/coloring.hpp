// Minimum-frequency colorings, kernel vertices, and clique-cut combination.
#pragma once

#include <functional>
#include <optional>

#include "minorlab/color_assignment.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/oracle.hpp"

namespace minorlab {

// Proper <=k-coloring whose frequency vector is the global lexicographic
// minimum; ties broken by the lexicographically smallest color map.
// Exhaustive backtracking, lowest vertex first, lowest color first.
inline ColorAssignment min_frequency_coloring(const Graph& g, int k, int size_cap = 12) {
  const int n = g.vertex_count();
  if (n > size_cap) throw budget_error("min_frequency_coloring: graph beyond size cap");
  if (k < 1) throw std::invalid_argument("min_frequency_coloring: palette must be positive");

  std::optional<std::vector<int>> best;
  std::vector<int> best_fv;  // counts, highest color first
  std::vector<int> cur(static_cast<size_t>(n), 0);
  std::vector<int> counts(static_cast<size_t>(k) + 1, 0);

  // counts of colors >= 2 only grow, so a partial assignment whose high-color
  // prefix already beats the incumbent can be cut
  auto prefix_hopeless = [&]() {
    if (!best) return false;
    for (int c = k; c >= 2; --c) {
      int have = counts[static_cast<size_t>(c)];
      int incumbent = best_fv[static_cast<size_t>(k - c)];
      if (have > incumbent) return true;
      if (have < incumbent) return false;
    }
    return false;
  };

  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      std::vector<int> fv(static_cast<size_t>(k), 0);
      for (int c : cur) ++fv[static_cast<size_t>(k - c)];
      if (!best || fv < best_fv) {  // lexicographically first map wins ties
        best = cur;
        best_fv = fv;
      }
      return;
    }
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && cur[static_cast<size_t>(u)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur[static_cast<size_t>(v)] = c;
      ++counts[static_cast<size_t>(c)];
      if (!prefix_hopeless()) go(v + 1);
      --counts[static_cast<size_t>(c)];
    }
    cur[static_cast<size_t>(v)] = 0;
  };
  go(0);
  if (!best) throw std::invalid_argument("min_frequency_coloring: graph is not k-colorable");
  return ColorAssignment(k, *best);
}

// True iff every proper k-coloring of g uses all k colors on U.  Requires
// chromatic number exactly k (oracle-verified).
inline bool kernel_check(const Graph& g, const VertexSet& u, int k, int size_cap = 12) {
  const int n = g.vertex_count();
  if (n > size_cap) throw budget_error("kernel_check: graph beyond size cap");
  if (oracle::chromatic_number(g, size_cap) != k)
    throw std::invalid_argument("kernel_check: chromatic number differs from k");

  bool all_use_k = true;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  std::function<bool(int)> go = [&](int v) -> bool {  // false = counterexample found
    if (v == n) {
      std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
      int used = 0;
      for (int w : u)
        if (!seen[static_cast<size_t>(cur[static_cast<size_t>(w)])]) {
          seen[static_cast<size_t>(cur[static_cast<size_t>(w)])] = 1;
          ++used;
        }
      if (used < k) {
        all_use_k = false;
        return false;
      }
      return true;
    }
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (w < v && cur[static_cast<size_t>(w)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur[static_cast<size_t>(v)] = c;
      if (!go(v + 1)) return false;
    }
    cur[static_cast<size_t>(v)] = 0;
    return true;
  };
  go(0);
  return all_use_k;
}

// ---------------------------------------------------------------------------
// Combining colorings across a clique cut set (P2 Lemma).  cl_l and cl_r are
// partial assignments (0 = unassigned) covering the two sides C_l ∪ W and
// C_r ∪ W; cl_r is palette-permuted until it agrees with cl_l on W.

inline ColorAssignment combine_colorings(const Graph& g, const VertexSet& w,
                                         const ColorAssignment& cl_l, const ColorAssignment& cl_r) {
  const int n = g.vertex_count();
  for (int v : w)
    if (!g.has_vertex(v)) throw std::invalid_argument("combine_colorings: W out of range");
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (!g.has_edge(w[i], w[j])) throw std::invalid_argument("combine_colorings: W is not a clique");
  if (!separates(g, w)) throw std::invalid_argument("combine_colorings: W is not a cut set");

  auto domain = [&](const ColorAssignment& cl) {
    VertexSet d;
    for (int v = 0; v < n; ++v)
      if (cl.colors.at(static_cast<size_t>(v)) != 0) d.push_back(v);
    return d;
  };
  VertexSet dl = domain(cl_l), dr = domain(cl_r), inter, uni;
  std::set_intersection(dl.begin(), dl.end(), dr.begin(), dr.end(), std::back_inserter(inter));
  std::set_union(dl.begin(), dl.end(), dr.begin(), dr.end(), std::back_inserter(uni));
  if (inter != w || static_cast<int>(uni.size()) != n)
    throw std::invalid_argument("combine_colorings: side domains must cover V and meet exactly on W");
  for (auto [a, b] : g.edges()) {
    bool al = std::binary_search(dl.begin(), dl.end(), a), bl = std::binary_search(dl.begin(), dl.end(), b);
    bool ar = std::binary_search(dr.begin(), dr.end(), a), br = std::binary_search(dr.begin(), dr.end(), b);
    if (!((al && bl) || (ar && br)))
      throw std::invalid_argument("combine_colorings: edge crosses the cut outside W");
    if (al && bl && cl_l.color(a) == cl_l.color(b))
      throw std::invalid_argument("combine_colorings: left side not properly colored");
    if (ar && br && cl_r.color(a) == cl_r.color(b))
      throw std::invalid_argument("combine_colorings: right side not properly colored");
  }

  const int k = std::max(cl_l.palette, cl_r.palette);
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool agrees = true;
    for (int v : w)
      if (perm[static_cast<size_t>(cl_r.color(v) - 1)] != cl_l.color(v)) {
        agrees = false;
        break;
      }
    if (!agrees) continue;
    ColorAssignment out(k, std::vector<int>(static_cast<size_t>(n), 0));
    for (int v : dl) out.colors[static_cast<size_t>(v)] = cl_l.color(v);
    for (int v : dr) out.colors[static_cast<size_t>(v)] = perm[static_cast<size_t>(cl_r.color(v) - 1)];
    return out;
  } while (std::next_permutation(perm.begin(), perm.end()));
  // W is a clique: both restrictions are injective, so a permutation exists
  throw std::logic_error("combine_colorings: no aligning permutation found");
}

}  // namespace minorlab
