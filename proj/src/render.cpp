#include "vkcurve/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace vk {

namespace {

char const* stroke(ColoredDiagram const* cd, EdgeIdx e) {
  if (!cd) return "black";
  switch (cd->color(e)) {
    case EdgeColor::blue: return "blue";
    case EdgeColor::green: return "green";
    case EdgeColor::yellow: return "gold";
    case EdgeColor::uncoloured: break;
  }
  return "black";
}

}  // namespace

std::string render_dot(Diagram const& d, ColoredDiagram const* cd) {
  std::ostringstream os;
  os << "digraph K {\n";
  for (VertexIdx v = 0; v < d.vertex_count(); ++v) {
    os << "  v" << d.vertex_id(v) << " [label=\"" << d.vertex_id(v) << "\"";
    if (d.is_boundary_vertex(v)) os << ", shape=box";
    os << "];\n";
  }
  for (EdgeIdx e = 0; e < d.edge_count(); ++e) {
    auto const& ed = d.edge(e);
    os << "  v" << d.vertex_id(ed.tail) << " -> v" << d.vertex_id(ed.head) << " [label=\"x" << ed.label
       << "\", color=" << stroke(cd, e) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_svg(Diagram const& d, ColoredDiagram const* cd) {
  if (!d.is_disk()) throw DiagramError(DiagramErrc::unsupported_surface, "only disks have a planar drawing");
  int const nv = d.vertex_count();
  std::vector<double> x(nv, 0.0), y(nv, 0.0);
  std::vector<bool> pinned(nv, false);
  auto outer = d.outer_darts();
  std::vector<VertexIdx> ring;
  for (DartIdx o : outer) {
    VertexIdx v = d.tail(o);
    if (!pinned[v]) {
      pinned[v] = true;
      ring.push_back(v);
    }
  }
  double const radius = 400.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
    x[ring[i]] = radius * std::cos(a);
    y[ring[i]] = -radius * std::sin(a);
  }
  for (int it = 0; it < 2000; ++it) {
    double moved = 0;
    for (VertexIdx v = 0; v < nv; ++v) {
      if (pinned[v]) continue;
      double sx = 0, sy = 0;
      for (DartIdx e : d.rotation(v)) {
        sx += x[d.head(e)];
        sy += y[d.head(e)];
      }
      double nx = sx / d.degree(v), ny = sy / d.degree(v);
      moved = std::max(moved, std::abs(nx - x[v]) + std::abs(ny - y[v]));
      x[v] = nx;
      y[v] = ny;
    }
    if (moved < 1e-6) break;
  }
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-450 -450 900 900\" width=\"900\" height=\"900\">\n";
  os << "<defs><marker id=\"a\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
        "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n";
  for (EdgeIdx e = 0; e < d.edge_count(); ++e) {
    auto const& ed = d.edge(e);
    double x1 = x[ed.tail], y1 = y[ed.tail], x2 = x[ed.head], y2 = y[ed.head];
    // stop short of the head so the arrow stays visible
    double dx = x2 - x1, dy = y2 - y1, len = std::hypot(dx, dy);
    double cut = len > 20 ? 8 / len : 0;
    os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 - dx * cut << "\" y2=\"" << y2 - dy * cut
       << "\" stroke=\"" << stroke(cd, e) << "\" stroke-width=\"2\" marker-end=\"url(#a)\"/>\n";
    os << "<text x=\"" << (x1 + x2) / 2 << "\" y=\"" << (y1 + y2) / 2 << "\" font-size=\"11\">x" << ed.label
       << "</text>\n";
  }
  for (VertexIdx v = 0; v < nv; ++v) {
    os << "<circle cx=\"" << x[v] << "\" cy=\"" << y[v] << "\" r=\"5\" fill=\""
       << (d.is_boundary_vertex(v) ? "white" : "black") << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << x[v] + 7 << "\" y=\"" << y[v] - 7 << "\" font-size=\"12\">" << d.vertex_id(v)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace vk
