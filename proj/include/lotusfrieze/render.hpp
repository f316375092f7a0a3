#pragma once

/**
 * @file render.hpp
 * @brief Text emitters: lotus SVG, frieze grid, resolution graph as DOT and
 *        as plain text. Output depends only on the input values.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/errors.hpp"
#include "lotusfrieze/frieze.hpp"
#include "lotusfrieze/lotus.hpp"
#include "lotusfrieze/resolution.hpp"

namespace lotusfrieze {

struct RenderOptions {
  double scale = 40.0;  ///< pixels per lattice unit
  bool show_marks = true;
  bool show_grid = false;
  bool label_weights = false;
};

namespace detail {

inline std::string fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace detail

/// Standalone SVG: one <polygon> per petal, a <polyline> along the lateral
/// boundary and one <circle> per mark. Lattice y points up.
inline std::string render_lotus_svg(const Lotus& l, const RenderOptions& o = {}) {
  if (!(o.scale > 0)) throw DomainError("render: scale must be positive");
  const double margin = 20.0;
  const auto vertices = l.vertices();
  double max_x = 1;
  double max_y = 1;
  for (const auto& v : vertices) {
    max_x = std::max(max_x, detail::to_double(v.x));
    max_y = std::max(max_y, detail::to_double(v.y));
  }
  const double width = 2 * margin + max_x * o.scale;
  const double height = 2 * margin + max_y * o.scale;
  auto px = [&](const LatticePoint& p) { return detail::fixed(margin + detail::to_double(p.x) * o.scale); };
  auto py = [&](const LatticePoint& p) { return detail::fixed(margin + (max_y - detail::to_double(p.y)) * o.scale); };
  auto point = [&](const LatticePoint& p) { return px(p) + "," + py(p); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fixed(width) +
         "\" height=\"" + detail::fixed(height) + "\" viewBox=\"0 0 " + detail::fixed(width) + " " +
         detail::fixed(height) + "\">\n";
  if (o.show_grid) {
    std::string d;
    for (long x = 0; x <= static_cast<long>(max_x); ++x) {
      d += "M" + px(LatticePoint(x, 0)) + "," + py(LatticePoint(x, 0)) + "V" +
           py(LatticePoint(x, static_cast<long>(max_y)));
    }
    for (long y = 0; y <= static_cast<long>(max_y); ++y) {
      d += "M" + px(LatticePoint(0, y)) + "," + py(LatticePoint(0, y)) + "H" +
           px(LatticePoint(static_cast<long>(max_x), y));
    }
    out += "  <path class=\"grid\" d=\"" + d + "\" fill=\"none\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  out += "  <g class=\"petals\" fill=\"#f4d6e4\" stroke=\"#555555\" stroke-width=\"1\">\n";
  for (const auto& petal : l.petals()) {
    out += "    <polygon points=\"" + point(petal.u()) + " " + point(petal.apex()) + " " + point(petal.v()) + "\"/>\n";
  }
  out += "  </g>\n";

  const auto boundary = lateral_boundary(l);
  std::string pts;
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    if (k) pts += " ";
    pts += point(boundary[k]);
  }
  out += "  <polyline class=\"lateral-boundary\" points=\"" + pts +
         "\" fill=\"none\" stroke=\"#1f4fbf\" stroke-width=\"3\"/>\n";

  if (o.label_weights && !l.degenerate()) {
    const auto counts = incidence_counts(l);
    out += "  <g class=\"weights\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t k = 1; k + 1 < boundary.size(); ++k) {
      const auto& p = boundary[k];
      out += "    <text x=\"" + px(p) + "\" y=\"" + py(p) + "\" dx=\"6\" dy=\"-6\">-" +
             std::to_string(counts.at(p)) + "</text>\n";
    }
    out += "  </g>\n";
  }
  if (o.show_marks) {
    out += "  <g class=\"marks\" fill=\"#c01818\">\n";
    for (const auto& m : l.marks()) {
      out += "    <circle cx=\"" + px(m) + "\" cy=\"" + py(m) + "\" r=\"5\"/>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

/// Offset grid of rows 0..m, row r holding entry(i, i+r). Cells have a fixed
/// even width and row r is shifted right by r half cells.
inline std::string render_frieze_text(const Frieze& f, int periods = 1) {
  if (periods < 1) throw DomainError("render_frieze_text: periods must be >= 1");
  const int m = f.period();
  const int columns = periods * m;
  std::size_t longest = 1;
  for (const auto& [key, value] : f.fundamental_domain()) longest = std::max(longest, value.str().size());
  const std::size_t half = (longest + 2) / 2;
  std::string out;
  for (int r = 0; r <= m; ++r) {
    std::string line;
    for (int i = 0; i < columns; ++i) {
      const std::string text = f.entry(i, i + r).str();
      const std::size_t end = (static_cast<std::size_t>(2 * i + r) + 2) * half;
      line.append(end - line.size() - text.size(), ' ');
      line += text;
    }
    out += line + "\n";
  }
  return out;
}

/// Graphviz source: nodes E1..Ek labeled by weight, joined in a chain; each
/// arrow is an extra unlabeled node A_k reached by a directed-looking edge.
inline std::string render_graph_dot(const ResolutionGraph& g) {
  std::string out = "graph resolution {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t k = 1; k <= g.size(); ++k) {
    out += "  E" + std::to_string(k) + " [label=\"" + std::to_string(g.weights[k - 1]) + "\"];\n";
  }
  for (std::size_t k = 1; k < g.size(); ++k) {
    out += "  E" + std::to_string(k) + " -- E" + std::to_string(k + 1) + ";\n";
  }
  for (auto k : g.arrows) {
    const std::string a = "A" + std::to_string(k);
    out += "  " + a + " [shape=point, style=invis];\n";
    out += "  E" + std::to_string(k) + " -- " + a + " [dir=forward, arrowhead=normal];\n";
  }
  out += "}\n";
  return out;
}

/// "w_1 w_2 ... w_k" and, when arrows exist, a second line "arrows: i j ...".
inline std::string render_graph_text(const ResolutionGraph& g) {
  std::string out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(g.weights[k]);
  }
  out += "\n";
  if (!g.arrows.empty()) {
    out += "arrows:";
    for (auto k : g.arrows) out += " " + std::to_string(k);
    out += "\n";
  }
  return out;
}

}  // namespace lotusfrieze
