#pragma once

#include <memory>
#include <vector>

#include "cheeger/bvh.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/point.hpp"

namespace cheeger {

// Straight segment (curvature 0) or circular arc of sweep at most pi.
// Positive curvature: the center lies to the left of the directed chord, so the
// arc turns left and bulges to the right (outward on a counter-clockwise loop).
struct ArcEdge {
  Point start;
  Point end;
  double curvature = 0.0;

  bool is_segment() const { return curvature == 0.0; }
  double chord() const { return dist(start, end); }
  double radius() const { return 1.0 / std::abs(curvature); }
  // signed turning angle along the edge
  double sweep() const;
  Point center() const;
  double length() const;
  Point tangent_start() const;
  Point tangent_end() const;
  Point tangent_at(double f) const;
  // point at fraction f of the sweep (or of the length for segments)
  Point at(double f) const;
  // signed area between the chord and the arc (positive when the arc bulges right)
  double segment_area() const;
  Box bbox() const;
  double distance(Point p) const;
  ArcEdge reversed() const { return {end, start, -curvature}; }
};

// Builds an edge; canonicalizes near-straight arcs (|k| * chord < 1e-12) to segments.
ArcEdge make_edge(Point a, Point b, double curvature);
// Arc around `center` from angle t0 sweeping `sweep` radians (any magnitude),
// split into pieces of sweep at most max_piece.
std::vector<ArcEdge> make_arc(Point center, double radius, double t0, double sweep,
                              double max_piece = 1.5707963267948966);

// Splits an edge into pieces of sweep at most max_sweep; end points are kept exactly.
std::vector<ArcEdge> split_edge(const ArcEdge& e, double max_sweep = 1.5707963267948966);
// Arc from a through m to b (any sweep below 2 pi), split to pieces of at most pi/2.
std::vector<ArcEdge> arc_through(Point a, Point m, Point b);

struct ArcGon {
  std::vector<ArcEdge> edges;
};

struct RegionSet {
  std::vector<ArcGon> components;
  bool empty() const { return components.empty(); }
};

// closure, orientation, sweep bound; simplicity when check_simple
void validate(const ArcGon& g, bool check_simple = false);
double signed_area(const ArcGon& g);
double area(const ArcGon& g);
double area(const RegionSet& s);
double perimeter(const ArcGon& g);
double perimeter(const RegionSet& s);
Box bbox(const ArcGon& g);
Box bbox(const RegionSet& s);

bool contains(const ArcGon& g, Point p);
double boundary_distance(const ArcGon& g, Point p);
bool contains_disc(const ArcGon& g, Point c, double r, double tol = 1e-9);

// Point on the boundary at arclength s (wrapped), with the outward normal there.
// Junction points use the average of the adjacent normals.
struct BoundarySample {
  Point p;
  Point normal;
  std::size_t edge;
};
std::vector<BoundarySample> sample_boundary(const ArcGon& g, int n);

// Accelerated boundary queries over one or more loops.
class EdgeIndex {
 public:
  EdgeIndex() = default;
  explicit EdgeIndex(const ArcGon& g);
  explicit EdgeIndex(const RegionSet& s);
  explicit EdgeIndex(std::vector<ArcEdge> edges);

  double distance(Point p, std::int64_t* edge = nullptr) const;
  // parity of the closed loops around p
  bool contains(Point p) const;
  const std::vector<ArcEdge>& edges() const { return edges_; }
  const Bvh& bvh() const { return bvh_; }
  double scale() const { return scale_; }

 private:
  std::vector<ArcEdge> edges_;
  Bvh bvh_;
  double scale_ = 0.0;
};

// {x in g : dist(x, boundary) > r}. Throws FallbackRequired when the trimmed
// offset cannot be assembled into loops.
RegionSet inner_parallel(const ArcGon& g, double r);
RegionSet inner_parallel(const RegionSet& s, double r);
// Dilation of every component; overlapping dilations merge. Returns outer loops.
RegionSet dilate(const RegionSet& s, double r);
// Dilation that must be a single loop; NotConnected otherwise.
ArcGon minkowski_disc(const RegionSet& s, double r);
ArcGon minkowski_disc(const ArcGon& g, double r);
ArcGon minkowski_disc(Point p, double r);

// Factories and transforms
ArcGon make_disc(Point center, double radius);
ArcGon make_polygon(const std::vector<Point>& ccw);
ArcGon make_rect(double x0, double y0, double x1, double y1);
ArcGon scaled(const ArcGon& g, double s);
ArcGon translated(const ArcGon& g, Point d);

// Hausdorff distance between two boundaries estimated from dense samples.
double boundary_hausdorff(const ArcGon& a, const ArcGon& b, int samples = 4096);

}  // namespace cheeger
