// Immutable labeled simple undirected graphs and minor actions.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorlab {

using VertexSet = std::vector<int>;  // sorted ascending unless stated otherwise

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(check_n(n)), adj_(static_cast<size_t>(n)) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_checked(u, v);
    finish();
  }

  int vertex_count() const { return n_; }

  int edge_count() const {
    size_t m = 0;
    for (const auto& a : adj_) m += a.size();
    return static_cast<int>(m / 2);
  }

  bool empty() const { return n_ == 0; }

  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  int min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  bool has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& a = adj_[static_cast<size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  // Edges as pairs u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[static_cast<size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const {
    return static_cast<long>(edge_count()) * 2 == static_cast<long>(n_) * (n_ - 1);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  static int check_n(int n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    return n;
  }

  void add_edge_checked(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }

  void finish() {
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------------------
// Minor actions: delete-vertex, delete-edge, contract-edge.

struct MinorAction {
  enum class Kind { delete_vertex, delete_edge, contract_edge };
  Kind kind;
  int u = -1;
  int v = -1;  // unused for delete_vertex

  static MinorAction del_vertex(int v) { return {Kind::delete_vertex, v, -1}; }
  static MinorAction del_edge(int u, int v) { return {Kind::delete_edge, u, v}; }
  static MinorAction contract(int u, int v) { return {Kind::contract_edge, u, v}; }
};

// relabel[old] is the new dense id, or -1 for a removed vertex.  Both
// endpoints of a contraction map to the merged vertex's id.
struct ApplyResult {
  Graph graph;
  std::vector<int> relabel;
};

inline ApplyResult apply_minor_action(const Graph& g, const MinorAction& a) {
  const int n = g.vertex_count();
  auto need_vertex = [&](int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("minor action: missing vertex");
  };
  auto need_edge = [&](int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("minor action: missing edge");
  };

  std::vector<int> relabel(static_cast<size_t>(n), -1);
  std::vector<std::pair<int, int>> edges;

  switch (a.kind) {
    case MinorAction::Kind::delete_vertex: {
      need_vertex(a.u);
      int next = 0;
      for (int v = 0; v < n; ++v)
        if (v != a.u) relabel[static_cast<size_t>(v)] = next++;
      for (auto [u, v] : g.edges())
        if (u != a.u && v != a.u)
          edges.emplace_back(relabel[static_cast<size_t>(u)], relabel[static_cast<size_t>(v)]);
      return {Graph(n - 1, edges), relabel};
    }
    case MinorAction::Kind::delete_edge: {
      need_edge(a.u, a.v);
      std::iota(relabel.begin(), relabel.end(), 0);
      for (auto [u, v] : g.edges())
        if (!((u == a.u && v == a.v) || (u == a.v && v == a.u))) edges.emplace_back(u, v);
      return {Graph(n, edges), relabel};
    }
    case MinorAction::Kind::contract_edge: {
      // identification of two distinct vertices; the papers contract
      // non-adjacent admissive pairs as well as edges
      need_vertex(a.u);
      need_vertex(a.v);
      if (a.u == a.v) throw std::invalid_argument("minor action: contracting a vertex with itself");
      const int keep = std::min(a.u, a.v), drop = std::max(a.u, a.v);
      int next = 0;
      for (int v = 0; v < n; ++v)
        if (v != drop) relabel[static_cast<size_t>(v)] = next++;
      relabel[static_cast<size_t>(drop)] = relabel[static_cast<size_t>(keep)];
      for (auto [u, v] : g.edges()) {
        int nu = relabel[static_cast<size_t>(u)], nv = relabel[static_cast<size_t>(v)];
        if (nu != nv) edges.emplace_back(nu, nv);  // loops from the contracted edge drop out
      }
      return {Graph(n - 1, edges), relabel};
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Connectivity and components.

inline std::vector<VertexSet> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] != -1) continue;
    VertexSet cur;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      cur.push_back(v);
      for (int w : g.neighbors(v))
        if (comp[static_cast<size_t>(w)] == -1) {
          comp[static_cast<size_t>(w)] = static_cast<int>(out.size());
          stack.push_back(w);
        }
    }
    std::sort(cur.begin(), cur.end());
    out.push_back(std::move(cur));
  }
  // components are discovered in order of their least element already
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

// Connectivity of g minus a set of vertices (removed flagged true).
inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<size_t>(v)]) {
      ++alive;
      if (start == -1) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{start};
  seen[static_cast<size_t>(start)] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!removed[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == alive;
}

inline bool separates(const Graph& g, const VertexSet& cut) {
  std::vector<char> removed(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : cut) removed.at(static_cast<size_t>(v)) = 1;
  return !connected_without(g, removed);
}

namespace detail {

// Vertex connectivity via disjoint-path counting (vertex-split max flow),
// used past the brute-force size cap.
inline int max_vertex_disjoint_paths(const Graph& g, int s, int t) {
  const int n = g.vertex_count();
  // node 2v = in, 2v+1 = out; capacity 1 on in->out except for s,t
  const int N = 2 * n;
  std::vector<std::vector<int>> cap(static_cast<size_t>(N), std::vector<int>(static_cast<size_t>(N), 0));
  for (int v = 0; v < n; ++v) cap[static_cast<size_t>(2 * v)][static_cast<size_t>(2 * v + 1)] = (v == s || v == t) ? n : 1;
  for (auto [u, v] : g.edges()) {
    cap[static_cast<size_t>(2 * u + 1)][static_cast<size_t>(2 * v)] = n;
    cap[static_cast<size_t>(2 * v + 1)][static_cast<size_t>(2 * u)] = n;
  }
  int flow = 0;
  while (true) {
    std::vector<int> prev(static_cast<size_t>(N), -1);
    std::queue<int> q;
    q.push(2 * s + 1);
    prev[static_cast<size_t>(2 * s + 1)] = 2 * s + 1;
    while (!q.empty() && prev[static_cast<size_t>(2 * t)] == -1) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < N; ++y)
        if (cap[static_cast<size_t>(x)][static_cast<size_t>(y)] > 0 && prev[static_cast<size_t>(y)] == -1) {
          prev[static_cast<size_t>(y)] = x;
          q.push(y);
        }
    }
    if (prev[static_cast<size_t>(2 * t)] == -1) break;
    for (int y = 2 * t; y != 2 * s + 1; y = prev[static_cast<size_t>(y)]) {
      int x = prev[static_cast<size_t>(y)];
      --cap[static_cast<size_t>(x)][static_cast<size_t>(y)];
      ++cap[static_cast<size_t>(y)][static_cast<size_t>(x)];
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

// Largest k such that g stays connected after removing any k-1 vertices.
// Complete graphs give n-1 by convention.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("vertex_connectivity: empty graph");
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  if (n <= 16) {
    // brute-force separator enumeration, increasing size
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (int k = 1; k < n - 1; ++k) {
      VertexSet pick(static_cast<size_t>(k));
      // enumerate k-subsets lexicographically
      std::vector<int> idx(static_cast<size_t>(k));
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::fill(removed.begin(), removed.end(), 0);
        for (int i : idx) removed[static_cast<size_t>(i)] = 1;
        if (!connected_without(g, removed)) return k;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      }
    }
    return n - 1;
  }
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, detail::max_vertex_disjoint_paths(g, s, t));
  return best;
}

// All inclusion-minimal separating sets of size <= max_size, by size then
// lexicographic order.  Complete graphs have none.
inline std::vector<VertexSet> find_cut_sets(const Graph& g, int max_size) {
  if (!is_connected(g)) throw std::invalid_argument("find_cut_sets: graph must be connected");
  const int n = g.vertex_count();
  std::vector<VertexSet> found;
  auto has_subset = [&](const VertexSet& s) {
    for (const auto& f : found)
      if (std::includes(s.begin(), s.end(), f.begin(), f.end())) return true;
    return false;
  };
  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int k = 1; k <= std::min(max_size, n - 2); ++k) {
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      VertexSet s(idx.begin(), idx.end());
      if (!has_subset(s)) {
        std::fill(removed.begin(), removed.end(), 0);
        for (int i : s) removed[static_cast<size_t>(i)] = 1;
        if (!connected_without(g, removed)) found.push_back(s);
      }
      int i = k - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return found;
}

inline bool is_cut_vertex(const Graph& g, int v) {
  std::vector<char> removed(static_cast<size_t>(g.vertex_count()), 0);
  removed.at(static_cast<size_t>(v)) = 1;
  return !connected_without(g, removed);
}

// Induced subgraph on `keep` (sorted); old-to-new map returned alongside.
struct InducedResult {
  Graph graph;
  std::vector<int> relabel;  // old -> new, -1 if dropped
};

inline InducedResult induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> relabel(static_cast<size_t>(g.vertex_count()), -1);
  int next = 0;
  for (int v : keep) relabel.at(static_cast<size_t>(v)) = next++;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int nu = relabel[static_cast<size_t>(u)], nv = relabel[static_cast<size_t>(v)];
    if (nu != -1 && nv != -1) edges.emplace_back(nu, nv);
  }
  return {Graph(next, edges), relabel};
}

// ---------------------------------------------------------------------------
// Named constructions used throughout the corpus and tests.

inline Graph make_complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

inline Graph make_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph make_star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

// Wheel W_k: hub 0 joined to a k-cycle 1..k.
inline Graph make_wheel(int k) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= k; ++v) {
    e.emplace_back(0, v);
    e.emplace_back(v, v % k + 1);
  }
  return Graph(k + 1, e);
}

inline Graph make_complete_bipartite(int x, int y) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < x; ++u)
    for (int v = 0; v < y; ++v) e.emplace_back(u, x + v);
  return Graph(x + y, e);
}

// ---------------------------------------------------------------------------
// Bitmask view for exhaustive searches (n <= 32).

namespace detail {

struct BitGraph {
  int n = 0;
  uint32_t all = 0;
  std::vector<uint32_t> row;

  BitGraph() = default;
  explicit BitGraph(const Graph& g) : n(g.vertex_count()), row(static_cast<size_t>(g.vertex_count()), 0) {
    if (n > 32) throw std::invalid_argument("BitGraph: more than 32 vertices");
    all = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    for (auto [u, v] : g.edges()) {
      row[static_cast<size_t>(u)] |= uint32_t{1} << v;
      row[static_cast<size_t>(v)] |= uint32_t{1} << u;
    }
  }

  uint32_t neighborhood(uint32_t set) const {
    uint32_t out = 0;
    while (set) {
      int v = std::countr_zero(set);
      set &= set - 1;
      out |= row[static_cast<size_t>(v)];
    }
    return out;
  }

  bool adjacent_sets(uint32_t a, uint32_t b) const { return (neighborhood(a) & b) != 0; }

  bool connected_set(uint32_t set) const {
    if (set == 0) return true;
    uint32_t start = set & (~set + 1);
    uint32_t seen = start;
    while (true) {
      uint32_t grow = (neighborhood(seen) & set) | seen;
      if (grow == seen) break;
      seen = grow;
    }
    return seen == set;
  }
};

inline int popcount(uint32_t x) { return std::popcount(x); }

}  // namespace detail

inline VertexSet mask_to_set(uint32_t mask) {
  VertexSet s;
  while (mask) {
    s.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

inline uint32_t set_to_mask(const VertexSet& s) {
  uint32_t m = 0;
  for (int v : s) m |= uint32_t{1} << v;
  return m;
}

}  // namespace minorlab
