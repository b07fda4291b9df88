#pragma once
// Minimal SVG rendering of drawings and polylines, with optional display of
// one edge's perpendicular slab (the dashed forbidden region used when
// debugging the slab condition). 3D inputs are projected onto the xy-plane.

#include <algorithm>
#include <sstream>
#include <string>

#include "sapath/graph.hpp"

namespace sapath {

struct SvgOptions {
  double width = 800;     // canvas width in px; height follows the aspect ratio
  bool show_slabs = false;
  int slab_edge = 0;      // index into the edge list
  bool number_vertices = true;
};

namespace detail {

struct SvgMapper {
  double minx, miny, maxx, maxy, scale, w, h;
  static constexpr double kMargin = 24;

  template <class T>
  SvgMapper(const GraphDrawing<T>& g, double width) {
    minx = miny = 1e300;
    maxx = maxy = -1e300;
    for (const auto& p : g.vertices) {
      minx = std::min(minx, to_double(p.x()));
      maxx = std::max(maxx, to_double(p.x()));
      miny = std::min(miny, to_double(p.y()));
      maxy = std::max(maxy, to_double(p.y()));
    }
    double span = std::max({maxx - minx, maxy - miny, 1e-12});
    w = width;
    scale = (w - 2 * kMargin) / span;
    h = (maxy - miny) * scale + 2 * kMargin;
  }

  double x(double v) const { return kMargin + (v - minx) * scale; }
  double y(double v) const { return h - kMargin - (v - miny) * scale; }  // y up
};

}  // namespace detail

template <class T>
std::string drawing_to_svg(const GraphDrawing<T>& g, SvgOptions opt = {}) {
  if (g.vertices.empty()) throw std::invalid_argument("drawing_to_svg: empty drawing");
  detail::SvgMapper m(g, opt.width);
  std::ostringstream out;
  out.precision(10);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << m.w << "\" height=\"" << m.h
      << "\" viewBox=\"0 0 " << m.w << " " << m.h << "\">\n";

  if (opt.show_slabs && !g.edges.empty()) {
    int e = opt.slab_edge;
    if (e < 0 || e >= static_cast<int>(g.edges.size()))
      throw std::invalid_argument("drawing_to_svg: slab edge index out of range");
    auto [ui, vi] = g.edges[e];
    double ux = m.x(to_double(g.vertices[ui].x())), uy = m.y(to_double(g.vertices[ui].y()));
    double vx = m.x(to_double(g.vertices[vi].x())), vy = m.y(to_double(g.vertices[vi].y()));
    double dx = vx - ux, dy = vy - uy;
    double len = std::hypot(dx, dy);
    if (len > 1e-12) {
      // Perpendicular direction, extended across the canvas.
      double px = -dy / len, py = dx / len;
      double ext = m.w + m.h;
      auto line = [&](double cx, double cy) {
        out << "  <line x1=\"" << cx - px * ext << "\" y1=\"" << cy - py * ext << "\" x2=\""
            << cx + px * ext << "\" y2=\"" << cy + py * ext
            << "\" stroke=\"#c0392b\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
      };
      out << "  <polygon points=\"" << ux - px * ext << "," << uy - py * ext << " "
          << ux + px * ext << "," << uy + py * ext << " " << vx + px * ext << ","
          << vy + py * ext << " " << vx - px * ext << "," << vy - py * ext
          << "\" fill=\"#c0392b\" fill-opacity=\"0.08\"/>\n";
      line(ux, uy);
      line(vx, vy);
    }
  }

  for (auto [a, b] : g.edges)
    out << "  <line x1=\"" << m.x(to_double(g.vertices[a].x())) << "\" y1=\""
        << m.y(to_double(g.vertices[a].y())) << "\" x2=\"" << m.x(to_double(g.vertices[b].x()))
        << "\" y2=\"" << m.y(to_double(g.vertices[b].y()))
        << "\" stroke=\"#2c3e50\" stroke-width=\"1.5\"/>\n";

  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    double cx = m.x(to_double(g.vertices[i].x())), cy = m.y(to_double(g.vertices[i].y()));
    out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"#2980b9\"/>\n";
    if (opt.number_vertices)
      out << "  <text x=\"" << cx + 5 << "\" y=\"" << cy - 5
          << "\" font-size=\"10\" fill=\"#7f8c8d\">" << i << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

template <class T>
std::string polyline_to_svg(const Polyline<T>& p, SvgOptions opt = {}) {
  GraphDrawing<T> g;
  g.vertices = p.v;
  for (std::size_t i = 0; i + 1 < p.v.size(); ++i)
    g.edges.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
  return drawing_to_svg(g, opt);
}

}  // namespace sapath
