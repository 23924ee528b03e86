#include "coronoid/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "coronoid/error.hpp"
#include "coronoid/skeleton.hpp"

namespace coronoid {

namespace {

constexpr double kHalfSqrt3 = 0.8660254037844386;

struct Xy {
  double x, y;
};

// The SVG y axis points down; flip so the drawing matches the plane picture.
Xy to_svg(ScaledPoint p) {
  return {kHalfSqrt3 * static_cast<double>(p.x),
          -0.5 * static_cast<double>(p.y)};
}

void appendf(std::string& out, const char* fmt, double a, double b) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  out += buf;
}

}  // namespace

std::string render_svg(const HexSystem& k) {
  if (k.empty()) fail(Errc::empty_system, "nothing to render");
  SkeletonGraph g = skeleton(k);

  double xlo = 1e9, xhi = -1e9, ylo = 1e9, yhi = -1e9;
  for (auto v : g.vertices) {
    Xy p = to_svg(vertex_point(v));
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  appendf(out, "%.2f %.2f ", xlo - 1.0, ylo - 1.0);
  appendf(out, "%.2f %.2f", xhi - xlo + 2.0, yhi - ylo + 2.0);
  out += "\">\n";

  for (auto h : k) {
    out += "<polygon points=\"";
    bool first = true;
    for (auto v : boundary_cycle(h)) {
      if (!first) out += ' ';
      first = false;
      Xy p = to_svg(vertex_point(v));
      appendf(out, "%.2f,%.2f", p.x, p.y);
    }
    out += "\" fill=\"#e8eef7\" stroke=\"none\"/>\n";
  }

  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = g.edges[e];
    Xy a = to_svg(vertex_point(g.vertices[i]));
    Xy b = to_svg(vertex_point(g.vertices[j]));
    out += "<line x1=\"";
    appendf(out, "%.2f\" y1=\"%.2f\" ", a.x, a.y);
    appendf(out, "x2=\"%.2f\" y2=\"%.2f\"", b.x, b.y);
    out += g.edgeInternal[e] ? " stroke=\"#555555\" stroke-width=\"0.06\"/>\n"
                             : " stroke=\"#111111\" stroke-width=\"0.12\"/>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace coronoid
