#pragma once

// Center/angle form of boundary pieces used by the offset and intersection code.

#include <cmath>
#include <vector>

#include "cheeger/arcgeom.hpp"

namespace cheeger::detail {

constexpr double kPi = 3.14159265358979323846;

inline double signed_angle(Point u, Point v) { return std::atan2(cross(u, v), dot(u, v)); }

struct Piece {
  bool arc = false;
  Point a, b;
  Point c;
  double rho = 0.0, th0 = 0.0, sw = 0.0;

  static Piece segment(Point a, Point b) {
    Piece p;
    p.a = a, p.b = b;
    return p;
  }
  static Piece circular(Point c, double rho, double th0, double sw) {
    Piece p;
    p.arc = true;
    p.c = c, p.rho = rho, p.th0 = th0, p.sw = sw;
    p.a = c + polar(rho, th0);
    p.b = c + polar(rho, th0 + sw);
    return p;
  }
  static Piece from_edge(const ArcEdge& e) {
    if (e.is_segment()) return segment(e.start, e.end);
    Piece p;
    p.arc = true;
    p.c = e.center();
    p.rho = e.radius();
    Point v = e.start - p.c;
    p.th0 = std::atan2(v.y, v.x);
    p.sw = e.sweep();
    p.a = e.start, p.b = e.end;
    return p;
  }

  Point at(double f) const {
    if (f == 0.0) return a;
    if (f == 1.0) return b;
    if (!arc) return a + f * (b - a);
    return c + polar(rho, th0 + f * sw);
  }
  Point tangent(double f) const {
    if (!arc) return unit(b - a);
    Point r = polar(1.0, th0 + f * sw);
    return sw > 0 ? perp(r) : -perp(r);
  }
  double length() const { return arc ? rho * std::abs(sw) : dist(a, b); }
  Piece sub(double f0, double f1) const {
    Piece p = *this;
    if (arc) {
      p.th0 = th0 + f0 * sw;
      p.sw = (f1 - f0) * sw;
    }
    p.a = at(f0);
    p.b = at(f1);
    return p;
  }
  Box box() const {
    Box bx;
    bx.add(a);
    bx.add(b);
    if (arc) {
      static const Point dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      Point u0 = polar(1.0, th0);
      for (Point d : dirs) {
        double t = signed_angle(u0, d);
        if (sw > 0 ? t < 0 : t > 0) t += sw > 0 ? 2 * kPi : -2 * kPi;
        if (std::abs(t) <= std::abs(sw)) bx.add(c + rho * d);
      }
    }
    return bx;
  }
  // parameter of a point assumed to be on the carrier line/circle; may fall outside [0,1]
  double param(Point p) const {
    if (!arc) {
      Point r = b - a;
      return dot(p - a, r) / dot(r, r);
    }
    double t = signed_angle(polar(1.0, th0), p - c);
    double f = t / sw;
    double g = (t + (sw > 0 ? 2 * kPi : -2 * kPi)) / sw;
    auto off = [](double x) { return std::max({0.0, -x, x - 1.0}); };
    return off(g) < off(f) ? g : f;
  }
  // exact distance from p to the piece
  double distance(Point p) const {
    if (!arc) {
      Point r = b - a;
      double rr = dot(r, r);
      double t = rr > 0 ? std::clamp(dot(p - a, r) / rr, 0.0, 1.0) : 0.0;
      return dist(p, a + t * r);
    }
    Point v = p - c;
    double nv = norm(v);
    if (nv == 0.0) return rho;
    double f = param(p);
    if (f >= 0.0 && f <= 1.0) return std::abs(nv - rho);
    return std::min(dist(p, a), dist(p, b));
  }
};

// Intersections of two pieces; each hit gives (param on p, param on q).
struct Hit {
  double fp, fq;
};

inline void intersect(const Piece& p, const Piece& q, double tol, std::vector<Hit>& out) {
  auto try_point = [&](Point x) {
    double fp = p.param(x), fq = q.param(x);
    double tp = tol / std::max(p.length(), 1e-300), tq = tol / std::max(q.length(), 1e-300);
    if (fp < -tp || fp > 1 + tp || fq < -tq || fq > 1 + tq) return;
    out.push_back({std::clamp(fp, 0.0, 1.0), std::clamp(fq, 0.0, 1.0)});
  };
  if (!p.arc && !q.arc) {
    Point r = p.b - p.a, s = q.b - q.a;
    double den = cross(r, s);
    if (std::abs(den) <= 1e-14 * norm(r) * norm(s)) return;
    double t = cross(q.a - p.a, s) / den;
    try_point(p.a + t * r);
    return;
  }
  if (p.arc != q.arc) {
    const Piece& L = p.arc ? q : p;
    const Piece& C = p.arc ? p : q;
    Point r = L.b - L.a;
    double nr = norm(r);
    Point u = r / nr;
    Point f = L.a - C.c;
    double t0 = -dot(f, u);
    double h = std::abs(cross(u, f));
    if (h > C.rho + tol) return;
    Point foot = L.a + t0 * u;
    if (h >= C.rho) {
      try_point(foot);
      return;
    }
    double w = std::sqrt((C.rho - h) * (C.rho + h));
    try_point(foot + w * u);
    try_point(foot - w * u);
    return;
  }
  Point dc = q.c - p.c;
  double d = norm(dc);
  if (d < 1e-15 * (p.rho + q.rho)) return;
  if (d > p.rho + q.rho + tol || d < std::abs(p.rho - q.rho) - tol) return;
  Point u = dc / d;
  double a = (d * d + p.rho * p.rho - q.rho * q.rho) / (2 * d);
  double h2 = p.rho * p.rho - a * a;
  if (h2 <= 0) {
    a = std::clamp(a, -p.rho, p.rho);
    try_point(p.c + a * u);
    return;
  }
  double h = std::sqrt(h2);
  try_point(p.c + a * u + h * perp(u));
  try_point(p.c + a * u - h * perp(u));
}

// Pieces to edges, splitting arcs to at most pi/2 of sweep; endpoints are taken
// from `starts` so consecutive edges share them exactly.
inline void append_edges(const Piece& p, Point start, Point end, std::vector<ArcEdge>& out) {
  if (!p.arc) {
    if (!(start == end)) out.push_back({start, end, 0.0});
    return;
  }
  int n = std::max(1, static_cast<int>(std::ceil(std::abs(p.sw) / (kPi / 2) - 1e-12)));
  double k = (p.sw > 0 ? 1.0 : -1.0) / p.rho;
  Point prev = start;
  for (int i = 1; i <= n; ++i) {
    Point nxt = i == n ? end : p.c + polar(p.rho, p.th0 + p.sw * i / n);
    if (!(prev == nxt)) out.push_back(make_edge(prev, nxt, k));
    prev = nxt;
  }
}

}  // namespace cheeger::detail
