#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Branch-set certificate for an H minor.  branch_sets[i] hosts model vertex
// i; model_edges lists H's edges as index pairs.
struct MinorWitness {
  std::vector<VertexSet> branch_sets;
  std::vector<std::pair<int, int>> model_edges;
};

// Validates a witness from first principles.  This checker is shared ground
// truth and stays free of any search machinery.
inline bool validate_witness(const Graph& g, const MinorWitness& w, std::string* why = nullptr) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  for (const auto& bs : w.branch_sets) {
    if (bs.empty()) return fail("empty branch set");
    for (int v : bs) {
      if (!g.has_vertex(v)) return fail("branch set vertex out of range");
      if (used[static_cast<size_t>(v)]) return fail("branch sets not disjoint");
      used[static_cast<size_t>(v)] = 1;
    }
    // connectivity by plain BFS inside the branch set
    std::vector<int> stack{bs.front()};
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    seen[static_cast<size_t>(bs.front())] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v)) {
        if (seen[static_cast<size_t>(u)]) continue;
        if (!std::binary_search(bs.begin(), bs.end(), u)) continue;
        seen[static_cast<size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
    if (reached != bs.size()) return fail("branch set not connected");
  }
  for (auto [i, j] : w.model_edges) {
    if (i < 0 || j < 0 || i >= static_cast<int>(w.branch_sets.size()) ||
        j >= static_cast<int>(w.branch_sets.size()) || i == j)
      return fail("model edge index out of range");
    bool hit = false;
    for (int u : w.branch_sets[static_cast<size_t>(i)]) {
      for (int v : w.branch_sets[static_cast<size_t>(j)])
        if (g.has_edge(u, v)) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (!hit) return fail("model edge has no host edge");
  }
  return true;
}

// Additional requirement for "minor on U": every branch set meets U.
inline bool witness_on_set(const MinorWitness& w, const VertexSet& u) {
  for (const auto& bs : w.branch_sets) {
    bool hit = false;
    for (int v : bs)
      if (std::binary_search(u.begin(), u.end(), v)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// Complete-model witness check: K_x needs all pairs adjacent.
inline bool validate_clique_witness(const Graph& g, const MinorWitness& w, int x, std::string* why = nullptr) {
  if (static_cast<int>(w.branch_sets.size()) != x) {
    if (why) *why = "wrong branch count";
    return false;
  }
  MinorWitness full = w;
  full.model_edges.clear();
  for (int i = 0; i < x; ++i)
    for (int j = i + 1; j < x; ++j) full.model_edges.emplace_back(i, j);
  return validate_witness(g, full, why);
}

}  // namespace minorlab
