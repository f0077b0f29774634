#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "cheeger/errors.hpp"
#include "forge/cli.hpp"

namespace forge {

using cheeger::ArcEdge;
using cheeger::Box;
using cheeger::Point;

namespace {

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char b[32];
  std::snprintf(b, sizeof b, "%.9g", v);
  return b;
}

// y is flipped so the figure reads in the usual orientation
std::string xy(Point p) { return num(p.x) + " " + num(-p.y); }

void edge_cmd(std::string& d, const ArcEdge& e) {
  if (e.is_segment()) {
    d += " L " + xy(e.end);
    return;
  }
  // the flip keeps the picture, so a left turn is counter-clockwise on screen: sweep-flag 0
  std::string r = num(e.radius());
  d += " A " + r + " " + r + " 0 " + (std::abs(e.sweep()) > 3.141592653589793 ? "1" : "0") + " " +
       (e.curvature > 0 ? "0" : "1") + " " + xy(e.end);
}

struct Style {
  const char* fill;
  const char* stroke;
  double width;  // multiples of the base stroke
  bool dashed;
};

Style style_of(const std::string& name) {
  if (name == "omega") return {"#dde6f0", "#1f3b5c", 1.0, false};
  if (name == "cheeger_set") return {"#f3d9b1", "#a35a00", 1.0, false};
  if (name == "inner") return {"none", "#555555", 0.8, true};
  return {"none", "#c0002a", 3.0, false};
}

}  // namespace

std::string render_svg(const std::vector<Layer>& layers, int width_px) {
  if (layers.empty()) throw cheeger::UsageError("no layers to render");
  Box bb{1e300, 1e300, -1e300, -1e300};
  auto grow = [&](const Box& b) {
    bb.x0 = std::min(bb.x0, b.x0);
    bb.y0 = std::min(bb.y0, b.y0);
    bb.x1 = std::max(bb.x1, b.x1);
    bb.y1 = std::max(bb.y1, b.y1);
  };
  for (const auto& l : layers) {
    for (const auto& g : l.loops) grow(cheeger::bbox(g));
    for (const auto& e : l.strokes) grow(e.bbox());
    for (Point p : l.dots) grow({p.x, p.y, p.x, p.y});
  }
  if (!(bb.x1 >= bb.x0)) throw cheeger::UsageError("all layers are empty");
  double w = bb.x1 - bb.x0, h = bb.y1 - bb.y0;
  double pad = 0.05 * std::max({w, h, 1e-12});
  double vx = bb.x0 - pad, vy = -bb.y1 - pad, vw = w + 2 * pad, vh = h + 2 * pad;
  double base = 0.002 * std::max(vw, vh);
  int height_px = std::max(1, static_cast<int>(std::lround(width_px * vh / vw)));

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_px) + "\" height=\"" +
       std::to_string(height_px) + "\" viewBox=\"" + num(vx) + " " + num(vy) + " " + num(vw) + " " +
       num(vh) + "\">\n";
  for (const auto& l : layers) {
    Style st = style_of(l.name);
    s += "<g id=\"" + l.name + "\" fill=\"" + st.fill + "\" stroke=\"" + st.stroke +
         "\" stroke-width=\"" + num(base * st.width) + "\"";
    if (st.dashed) s += " stroke-dasharray=\"" + num(4 * base) + " " + num(3 * base) + "\"";
    s += ">\n";
    if (!l.loops.empty()) {
      std::string d;
      for (const auto& g : l.loops) {
        if (g.edges.empty()) continue;
        d += (d.empty() ? "M " : " M ") + xy(g.edges.front().start);
        for (const auto& e : g.edges) edge_cmd(d, e);
        d += " Z";
      }
      s += "<path fill-rule=\"evenodd\" d=\"" + d + "\"/>\n";
    }
    for (const auto& e : l.strokes) {
      std::string d = "M " + xy(e.start);
      edge_cmd(d, e);
      s += "<path fill=\"none\" d=\"" + d + "\"/>\n";
    }
    for (Point p : l.dots)
      s += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(-p.y) + "\" r=\"" + num(4 * base) + "\" fill=\"" +
           st.stroke + "\"/>\n";
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace forge
