// Deterministic DOT and one-page arc-diagram SVG output.
#pragma once

#include <sstream>

#include "minorlab/corpus.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

inline std::string emit_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// Vertices on a horizontal line, edges as semicircular arcs above it.
inline std::string emit_svg_arcs(const WingEmbedding& w) {
  const int n = w.graph.vertex_count();
  const int step = 40, margin = 30, baseline = 220;
  const int width = margin * 2 + step * std::max(0, n - 1);
  std::vector<int> pos(static_cast<size_t>(std::max(1, n)));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(w.order[static_cast<size_t>(i)])] = i;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << std::max(width, 60)
      << "\" height=\"" << baseline + 40 << "\">\n";
  for (auto [u, v] : w.graph.edges()) {
    int a = std::min(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    int b = std::max(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    int x1 = margin + a * step, x2 = margin + b * step;
    int r = (x2 - x1) / 2;
    out << "  <path d=\"M " << x1 << " " << baseline << " A " << r << " " << r << " 0 0 1 " << x2
        << " " << baseline << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (int i = 0; i < n; ++i) {
    int x = margin + i * step;
    out << "  <circle cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"4\" fill=\"black\"/>\n";
    out << "  <text x=\"" << x << "\" y=\"" << baseline + 20 << "\" text-anchor=\"middle\">"
        << w.order[static_cast<size_t>(i)] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

struct DiagramError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string emit_diagram(const CorpusItem& item, const std::string& format) {
  if (format == "dot") return emit_dot(item.graph);
  if (format == "svg-arc") {
    if (!item.wing_order) throw DiagramError("svg-arc needs wing order side data");
    return emit_svg_arcs(WingEmbedding{*item.wing_order, item.graph});
  }
  throw DiagramError("unknown diagram format: " + format);
}

}  // namespace minorlab
