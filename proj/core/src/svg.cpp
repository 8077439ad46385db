#include "trirealize/svg.hpp"

#include <algorithm>
#include <set>

#include "fmt/format.h"

namespace trirealize {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 40.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_svg(const Realization& realization, const Figure& figure,
                   const AngleAssignment* angles) {
  const auto& coords = realization.coords;
  double xmin = coords.front().x, xmax = xmin, ymin = coords.front().y, ymax = ymin;
  for (const Vec2 p : coords) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double scale = (kCanvas - 2.0 * kMargin) / span;
  // SVG's y axis points down.
  auto map = [&](Vec2 p) {
    return Vec2{kMargin + (p.x - xmin) * scale, kCanvas - kMargin - (p.y - ymin) * scale};
  };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.9g}\" height=\"{0:.9g}\" "
      "viewBox=\"0 0 {0:.9g} {0:.9g}\">\n",
      kCanvas);
  if (!figure.name().empty()) out += "  <title>" + escape(figure.name()) + "</title>\n";

  out += "  <polygon fill=\"#eef3fb\" stroke=\"#1f3b70\" stroke-width=\"2\" points=\"";
  const auto cycle = perimeter_cycle(figure);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vec2 p = map(coords.at(cycle[i]));
    out += fmt::format("{}{:.9g},{:.9g}", i == 0 ? "" : " ", p.x, p.y);
  }
  out += "\"/>\n";

  std::set<std::pair<VertexIndex, VertexIndex>> boundary;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    boundary.insert(std::minmax(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  std::set<std::pair<VertexIndex, VertexIndex>> drawn;
  for (const Triangle& tri : figure.triangles()) {
    for (int k = 0; k < 3; ++k) {
      const std::pair<VertexIndex, VertexIndex> edge = std::minmax(tri.at(k), tri.next(k));
      if (boundary.count(edge) || !drawn.insert(edge).second) continue;
      const Vec2 a = map(coords.at(edge.first));
      const Vec2 b = map(coords.at(edge.second));
      out += fmt::format(
          "  <line x1=\"{:.9g}\" y1=\"{:.9g}\" x2=\"{:.9g}\" y2=\"{:.9g}\" stroke=\"#5a6f94\" "
          "stroke-width=\"1\"/>\n",
          a.x, a.y, b.x, b.y);
    }
  }

  if (angles != nullptr) {
    for (TriangleIndex t = 0; t < figure.triangle_count(); ++t) {
      const Triangle& tri = figure.triangle(t);
      const Vec2 centroid = (coords.at(tri.at(0)) + coords.at(tri.at(1)) + coords.at(tri.at(2))) / 3.0;
      for (int k = 0; k < 3; ++k) {
        const Vec2 corner = coords.at(tri.at(k));
        const Vec2 p = map(corner + 0.3 * (centroid - corner));
        out += fmt::format(
            "  <text x=\"{:.9g}\" y=\"{:.9g}\" font-size=\"9\" fill=\"#8a4b08\" "
            "text-anchor=\"middle\">{:.9g}</text>\n",
            p.x, p.y, angles->at(t, k));
      }
    }
  }

  for (VertexIndex v = 0; v < figure.vertex_count(); ++v) {
    const Vec2 p = map(coords.at(v));
    out += fmt::format("  <circle cx=\"{:.9g}\" cy=\"{:.9g}\" r=\"2.5\" fill=\"#1f3b70\"/>\n", p.x, p.y);
    out += fmt::format(
        "  <text x=\"{:.9g}\" y=\"{:.9g}\" font-size=\"13\" fill=\"#000\">{}</text>\n", p.x + 4.0,
        p.y - 4.0, escape(figure.label(v)));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace trirealize
