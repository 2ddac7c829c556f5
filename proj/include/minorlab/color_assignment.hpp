#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Vertex -> color map over a fixed palette {1..palette}.  0 marks an
// unassigned vertex; operations that need totality reject those.
struct ColorAssignment {
  int palette = 0;
  std::vector<int> colors;  // indexed by vertex id

  ColorAssignment() = default;
  ColorAssignment(int palette_size, std::vector<int> c) : palette(palette_size), colors(std::move(c)) {}

  int color(int v) const { return colors.at(static_cast<size_t>(v)); }
  bool total() const {
    return std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 1; });
  }
  bool within_palette() const {
    return std::all_of(colors.begin(), colors.end(),
                       [&](int c) { return c >= 0 && c <= palette; });
  }
  int colors_used() const {
    std::vector<char> seen(static_cast<size_t>(palette) + 1, 0);
    int k = 0;
    for (int c : colors)
      if (c >= 1 && !seen[static_cast<size_t>(c)]) {
        seen[static_cast<size_t>(c)] = 1;
        ++k;
      }
    return k;
  }
};

// <times(l), times(l-1), ..., times(1)>, compared lexicographically.
struct FrequencyVector {
  std::vector<int> counts;

  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;
  friend bool operator<(const FrequencyVector& a, const FrequencyVector& b) {
    return std::lexicographical_compare(a.counts.begin(), a.counts.end(), b.counts.begin(),
                                        b.counts.end());
  }
};

inline FrequencyVector frequency_vector(const ColorAssignment& cl) {
  FrequencyVector fv;
  fv.counts.assign(static_cast<size_t>(cl.palette), 0);
  for (int c : cl.colors) {
    if (c < 1 || c > cl.palette) throw std::invalid_argument("frequency_vector: assignment not total");
    ++fv.counts[static_cast<size_t>(cl.palette - c)];
  }
  return fv;
}

enum class Ordering { less, equal, greater };

inline Ordering frequency_compare(const ColorAssignment& a, const ColorAssignment& b) {
  if (a.palette != b.palette) throw std::invalid_argument("frequency_compare: palette mismatch");
  auto fa = frequency_vector(a), fb = frequency_vector(b);
  if (fa < fb) return Ordering::less;
  if (fb < fa) return Ordering::greater;
  return Ordering::equal;
}

inline bool is_proper(const Graph& g, const ColorAssignment& cl) {
  if (static_cast<int>(cl.colors.size()) != g.vertex_count() || !cl.total())
    throw std::invalid_argument("is_proper: incomplete assignment");
  if (!cl.within_palette()) throw std::invalid_argument("is_proper: color outside palette");
  for (auto [u, v] : g.edges())
    if (cl.color(u) == cl.color(v)) return false;
  return true;
}

// A two-color exchange, or a composition applied left to right.
struct ColorExchange {
  std::vector<std::pair<int, int>> swaps;

  static ColorExchange single(int c1, int c2) { return {{{c1, c2}}}; }
  ColorExchange reversed() const {
    ColorExchange r = *this;
    std::reverse(r.swaps.begin(), r.swaps.end());
    return r;
  }
};

inline ColorAssignment color_exchange(const ColorAssignment& cl, const ColorExchange& f) {
  ColorAssignment out = cl;
  for (auto [c1, c2] : f.swaps) {
    if (c1 == c2 || c1 < 1 || c2 < 1 || c1 > cl.palette || c2 > cl.palette)
      throw std::invalid_argument("color_exchange: colors outside palette");
    for (int& c : out.colors) {
      if (c == c1)
        c = c2;
      else if (c == c2)
        c = c1;
    }
  }
  return out;
}

}  // namespace minorlab
