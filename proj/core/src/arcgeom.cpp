#include "cheeger/arcgeom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pieces.hpp"

namespace cheeger {

using detail::kPi;

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidGeometry: return "InvalidGeometry";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::FallbackRequired: return "FallbackRequired";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::InsufficientScales: return "InsufficientScales";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::DeltaTooLarge: return "DeltaTooLarge";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorKind::EmptyRegion: return "EmptyRegion";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

// ---- ArcEdge

double ArcEdge::sweep() const {
  if (is_segment()) return 0.0;
  double x = std::min(1.0, std::abs(curvature) * chord() / 2);
  double b = 2 * std::asin(x);
  return curvature > 0 ? b : -b;
}

Point ArcEdge::center() const {
  Point m = 0.5 * (start + end);
  double c = chord();
  Point n = perp((end - start) / c);
  double rho = radius();
  double h = std::sqrt(std::max(0.0, (rho - c / 2) * (rho + c / 2)));
  return curvature > 0 ? m + h * n : m - h * n;
}

double ArcEdge::length() const {
  if (is_segment()) return chord();
  return std::abs(sweep()) / std::abs(curvature);
}

Point ArcEdge::tangent_at(double f) const {
  Point u = (end - start) / chord();
  if (is_segment()) return u;
  return rotate(u, sweep() * (f - 0.5));
}
Point ArcEdge::tangent_start() const { return tangent_at(0.0); }
Point ArcEdge::tangent_end() const { return tangent_at(1.0); }

Point ArcEdge::at(double f) const {
  if (f == 0.0) return start;
  if (f == 1.0) return end;
  if (is_segment()) return start + f * (end - start);
  Point c = center();
  return c + rotate(start - c, f * sweep());
}

double ArcEdge::segment_area() const {
  if (is_segment()) return 0.0;
  double b = std::abs(sweep());
  double d;
  if (b < 0.05) {
    double b2 = b * b;
    d = b * b2 / 6 * (1 - b2 / 20 * (1 - b2 / 42 * (1 - b2 / 72 * (1 - b2 / 110))));
  } else {
    d = b - std::sin(b);
  }
  double a = d / (2 * curvature * curvature);
  return curvature > 0 ? a : -a;
}

Box ArcEdge::bbox() const {
  if (is_segment()) {
    Box b;
    b.add(start);
    b.add(end);
    return b;
  }
  return detail::Piece::from_edge(*this).box();
}

double ArcEdge::distance(Point p) const {
  if (is_segment()) return detail::Piece::segment(start, end).distance(p);
  Point c = center();
  Point v = p - c;
  double nv = norm(v);
  double rho = radius();
  if (nv == 0.0) return rho;
  Point a = start - c, b = end - c;
  bool within = curvature > 0 ? (cross(a, v) >= 0 && cross(v, b) >= 0)
                              : (cross(a, v) <= 0 && cross(v, b) <= 0);
  if (within) return std::abs(nv - rho);
  return std::min(dist(p, start), dist(p, end));
}

ArcEdge make_edge(Point a, Point b, double curvature) {
  if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(b.x) || !std::isfinite(b.y) ||
      !std::isfinite(curvature))
    throw InvalidGeometry("non-finite edge data");
  double c = dist(a, b);
  if (std::abs(curvature) * c < 1e-12) curvature = 0.0;
  return {a, b, curvature};
}

std::vector<ArcEdge> make_arc(Point center, double radius, double t0, double sweep,
                              double max_piece) {
  int n = std::max(1, static_cast<int>(std::ceil(std::abs(sweep) / max_piece - 1e-12)));
  double k = (sweep > 0 ? 1.0 : -1.0) / radius;
  std::vector<ArcEdge> out;
  Point prev = center + polar(radius, t0);
  for (int i = 1; i <= n; ++i) {
    Point nxt = center + polar(radius, t0 + sweep * i / n);
    out.push_back(make_edge(prev, nxt, k));
    prev = nxt;
  }
  return out;
}

std::vector<ArcEdge> split_edge(const ArcEdge& e, double max_sweep) {
  double sw = e.sweep();
  if (std::abs(sw) <= max_sweep) return {e};
  int n = static_cast<int>(std::ceil(std::abs(sw) / max_sweep - 1e-12));
  Point c = e.center();
  Point v = e.start - c;
  double t0 = std::atan2(v.y, v.x), rho = e.radius();
  std::vector<ArcEdge> out;
  Point prev = e.start;
  for (int i = 1; i <= n; ++i) {
    Point nxt = i == n ? e.end : c + polar(rho, t0 + sw * i / n);
    out.push_back(make_edge(prev, nxt, e.curvature));
    prev = nxt;
  }
  return out;
}

std::vector<ArcEdge> arc_through(Point a, Point m, Point b) {
  double turn = cross(m - a, b - m);
  double scale = std::max({dist(a, m), dist(m, b), dist(a, b)});
  if (std::abs(turn) <= 1e-15 * scale * scale) return {make_edge(a, b, 0.0)};
  // circumcenter
  Point ab = b - a, am = m - a;
  double d = 2 * cross(am, ab);
  double am2 = dot(am, am), ab2 = dot(ab, ab);
  Point c = a + Point{(ab.y * am2 - am.y * ab2) / d, (am.x * ab2 - ab.x * am2) / d};
  double rho = dist(a, c);
  Point va = a - c, vb = b - c;
  double t0 = std::atan2(va.y, va.x);
  double sw = std::atan2(cross(va, vb), dot(va, vb));
  if (turn > 0 && sw <= 0) sw += 2 * kPi;
  if (turn < 0 && sw >= 0) sw -= 2 * kPi;
  int n = std::max(1, static_cast<int>(std::ceil(std::abs(sw) / (kPi / 2) - 1e-12)));
  double k = (turn > 0 ? 1.0 : -1.0) / rho;
  std::vector<ArcEdge> out;
  Point prev = a;
  for (int i = 1; i <= n; ++i) {
    Point nxt = i == n ? b : c + polar(rho, t0 + sw * i / n);
    out.push_back(make_edge(prev, nxt, k));
    prev = nxt;
  }
  return out;
}

// ---- measures

double signed_area(const ArcGon& g) {
  double s = 0.0, seg = 0.0;
  if (g.edges.empty()) return 0.0;
  Point o = g.edges.front().start;
  for (const auto& e : g.edges) {
    s += cross(e.start - o, e.end - o);
    seg += e.segment_area();
  }
  return s / 2 + seg;
}

double area(const ArcGon& g) { return std::abs(signed_area(g)); }

double area(const RegionSet& s) {
  double a = 0.0;
  for (const auto& g : s.components) a += area(g);
  return a;
}

double perimeter(const ArcGon& g) {
  double p = 0.0;
  for (const auto& e : g.edges) p += e.length();
  return p;
}

double perimeter(const RegionSet& s) {
  double p = 0.0;
  for (const auto& g : s.components) p += perimeter(g);
  return p;
}

Box bbox(const ArcGon& g) {
  Box b;
  for (const auto& e : g.edges) b.add(e.bbox());
  return b;
}

Box bbox(const RegionSet& s) {
  Box b;
  for (const auto& g : s.components) b.add(bbox(g));
  return b;
}

void validate(const ArcGon& g, bool check_simple) {
  if (g.edges.size() < 1) throw InvalidGeometry("empty arc-gon");
  double scale = std::max(1.0, bbox(g).diagonal());
  std::size_t n = g.edges.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ArcEdge& e = g.edges[i];
    if (!std::isfinite(e.start.x) || !std::isfinite(e.start.y) || !std::isfinite(e.curvature))
      throw InvalidGeometry("non-finite coordinate in edge " + std::to_string(i));
    if (e.start == e.end) throw InvalidGeometry("degenerate edge " + std::to_string(i));
    if (std::abs(e.curvature) * e.chord() > 2 * (1 + 1e-9))
      throw InvalidGeometry("chord exceeds diameter in edge " + std::to_string(i));
    if (dist(e.end, g.edges[(i + 1) % n].start) > 1e-9 * scale)
      throw InvalidGeometry("open chain at edge " + std::to_string(i));
  }
  if (n == 1) throw InvalidGeometry("single-edge loop");
  if (!(signed_area(g) > 0)) throw InvalidGeometry("loop is not counter-clockwise");
  if (!check_simple) return;
  std::vector<detail::Piece> ps;
  std::vector<Box> boxes;
  for (const auto& e : g.edges) {
    ps.push_back(detail::Piece::from_edge(e));
    boxes.push_back(ps.back().box());
  }
  Bvh bvh(boxes);
  double tol = 1e-12 * scale;
  std::vector<detail::Hit> hits;
  for (std::size_t i = 0; i < n; ++i) {
    bvh.visit([&](const Box& b) { return b.overlaps(boxes[i]); },
              [&](std::size_t j) {
                if (j <= i) return;
                hits.clear();
                detail::intersect(ps[i], ps[j], tol, hits);
                bool adj_next = j == i + 1, adj_prev = (i == 0 && j == n - 1);
                for (const auto& h : hits) {
                  double ei = std::min(h.fp, 1 - h.fp) * ps[i].length();
                  double ej = std::min(h.fq, 1 - h.fq) * ps[j].length();
                  bool shared = (adj_next && h.fp > 0.5 && h.fq < 0.5) ||
                                (adj_prev && h.fp < 0.5 && h.fq > 0.5);
                  if (shared && ei <= 1e-6 * scale && ej <= 1e-6 * scale) continue;
                  throw InvalidGeometry("edges " + std::to_string(i) + " and " +
                                        std::to_string(j) + " intersect");
                }
              });
  }
}

// ---- queries

namespace {

bool chord_crosses(Point a, Point b, Point p) {
  if ((a.y > p.y) == (b.y > p.y)) return false;
  double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
  return x > p.x;
}

bool in_segment_region(const ArcEdge& e, Point p) {
  if (e.is_segment()) return false;
  double s = cross(e.end - e.start, p - e.start);
  if (e.curvature > 0 ? s >= 0 : s <= 0) return false;
  return dist(p, e.center()) < e.radius();
}

}  // namespace

bool contains(const ArcGon& g, Point p) {
  bool in = false;
  for (const auto& e : g.edges) {
    if (chord_crosses(e.start, e.end, p)) in = !in;
    if (in_segment_region(e, p)) in = !in;
  }
  return in;
}

double boundary_distance(const ArcGon& g, Point p) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& e : g.edges) d = std::min(d, e.distance(p));
  return d;
}

bool contains_disc(const ArcGon& g, Point c, double r, double tol) {
  if (!(r > 0)) return false;
  if (!contains(g, c)) return false;
  return boundary_distance(g, c) >= r - tol;
}

std::vector<BoundarySample> sample_boundary(const ArcGon& g, int n) {
  std::vector<BoundarySample> out;
  if (n <= 0 || g.edges.empty()) return out;
  std::size_t m = g.edges.size();
  std::vector<double> cum(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) cum[i + 1] = cum[i] + g.edges[i].length();
  double P = cum[m];
  auto outward = [](Point t) { return Point{t.y, -t.x}; };
  std::size_t e = 0;
  for (int k = 0; k < n; ++k) {
    double s = P * k / n;
    while (e + 1 < m && cum[e + 1] <= s) ++e;
    const ArcEdge& ed = g.edges[e];
    double len = cum[e + 1] - cum[e];
    double f = len > 0 ? (s - cum[e]) / len : 0.0;
    BoundarySample b{ed.at(f), outward(ed.tangent_at(f)), e};
    if (s - cum[e] <= 1e-12 * P) {
      const ArcEdge& pr = g.edges[(e + m - 1) % m];
      b.p = ed.start;
      b.normal = unit(outward(pr.tangent_end()) + outward(ed.tangent_start()));
    }
    out.push_back(b);
  }
  return out;
}

// ---- EdgeIndex

EdgeIndex::EdgeIndex(const ArcGon& g) : EdgeIndex(g.edges) {}

EdgeIndex::EdgeIndex(const RegionSet& s) {
  std::vector<ArcEdge> all;
  for (const auto& g : s.components) all.insert(all.end(), g.edges.begin(), g.edges.end());
  *this = EdgeIndex(std::move(all));
}

EdgeIndex::EdgeIndex(std::vector<ArcEdge> edges) : edges_(std::move(edges)) {
  std::vector<Box> boxes;
  boxes.reserve(edges_.size());
  Box all;
  for (const auto& e : edges_) {
    boxes.push_back(e.bbox());
    all.add(boxes.back());
  }
  scale_ = all.diagonal();
  bvh_.build(boxes);
}

double EdgeIndex::distance(Point p, std::int64_t* edge) const {
  return bvh_.nearest(p, [&](std::size_t i) { return edges_[i].distance(p); },
                      std::numeric_limits<double>::infinity(), edge);
}

bool EdgeIndex::contains(Point p) const {
  bool in = false;
  bvh_.visit([&](const Box& b) { return b.y0 <= p.y && p.y <= b.y1 && b.x1 >= p.x; },
             [&](std::size_t i) {
               const ArcEdge& e = edges_[i];
               if (chord_crosses(e.start, e.end, p)) in = !in;
               if (in_segment_region(e, p)) in = !in;
             });
  return in;
}

// ---- factories

ArcGon make_disc(Point center, double radius) {
  if (!(radius > 0)) throw InvalidParameter("disc radius must be positive");
  return {make_arc(center, radius, 0.0, 2 * kPi)};
}

ArcGon make_polygon(const std::vector<Point>& ccw) {
  ArcGon g;
  for (std::size_t i = 0; i < ccw.size(); ++i)
    g.edges.push_back(make_edge(ccw[i], ccw[(i + 1) % ccw.size()], 0.0));
  return g;
}

ArcGon make_rect(double x0, double y0, double x1, double y1) {
  return make_polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ArcGon minkowski_disc(Point p, double r) {
  if (!(r > 0)) throw InvalidParameter("dilation radius must be positive");
  return make_disc(p, r);
}

ArcGon scaled(const ArcGon& g, double s) {
  ArcGon out;
  for (const auto& e : g.edges) out.edges.push_back({s * e.start, s * e.end, e.curvature / s});
  return out;
}

ArcGon translated(const ArcGon& g, Point d) {
  ArcGon out;
  for (const auto& e : g.edges) out.edges.push_back({e.start + d, e.end + d, e.curvature});
  return out;
}

double boundary_hausdorff(const ArcGon& a, const ArcGon& b, int samples) {
  EdgeIndex ia(a), ib(b);
  double h = 0.0;
  for (const auto& s : sample_boundary(a, samples)) h = std::max(h, ib.distance(s.p));
  for (const auto& s : sample_boundary(b, samples)) h = std::max(h, ia.distance(s.p));
  return h;
}

}  // namespace cheeger
