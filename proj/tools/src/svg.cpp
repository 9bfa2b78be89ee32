#include "svg.hpp"

#include <algorithm>
#include <cstdio>

namespace cupcap::cli {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string render_svg(std::span<const Point> points, std::span<const Point> highlight, bool closed) {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!points.empty()) {
    min_x = max_x = points[0].x.get_d();
    min_y = max_y = points[0].y.get_d();
    for (const Point& p : points) {
      min_x = std::min(min_x, p.x.get_d());
      max_x = std::max(max_x, p.x.get_d());
      min_y = std::min(min_y, p.y.get_d());
      max_y = std::max(max_y, p.y.get_d());
    }
  }
  double span = std::max(max_x - min_x, max_y - min_y);
  if (span <= 0) span = 1;
  double scale = (kCanvas - 2 * kMargin) / span;
  auto sx = [&](const Point& p) { return kMargin + (p.x.get_d() - min_x) * scale; };
  // SVG's y axis points down.
  auto sy = [&](const Point& p) { return kCanvas - kMargin - (p.y.get_d() - min_y) * scale; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  s += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  if (highlight.size() >= 2) {
    s += closed ? "<polygon" : "<polyline";
    s += " fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < highlight.size(); ++i) {
      if (i) s += ' ';
      s += fmt(sx(highlight[i])) + "," + fmt(sy(highlight[i]));
    }
    s += "\"/>\n";
  }
  for (const Point& p : points)
    s += "<circle cx=\"" + fmt(sx(p)) + "\" cy=\"" + fmt(sy(p)) + "\" r=\"2.5\" fill=\"black\"/>\n";
  for (const Point& p : highlight)
    s += "<circle cx=\"" + fmt(sx(p)) + "\" cy=\"" + fmt(sy(p)) + "\" r=\"3.5\" fill=\"#c0392b\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace cupcap::cli
