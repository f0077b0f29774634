#include "cheeger/gridoracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "cheeger/errors.hpp"
#include "cheeger/parallel.hpp"

namespace cheeger {

std::size_t Grid::occupied_count() const {
  return static_cast<std::size_t>(std::count(occupancy.begin(), occupancy.end(), std::uint8_t{1}));
}

double default_grid_step(const Box& b) { return b.diagonal() / 2048.0; }

namespace {

// Parity events of one edge on the line y: the chord crossing (half-open rule)
// plus the two ends of the line's intersection with the circular segment region.
void row_events(const ArcEdge& e, double y, std::vector<double>& ev) {
  Point a = e.start, b = e.end;
  if ((a.y > y) != (b.y > y)) ev.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
  if (e.is_segment()) return;
  Point c = e.center();
  double rho = e.radius(), dy = y - c.y;
  if (std::abs(dy) >= rho) return;
  double w = std::sqrt((rho - dy) * (rho + dy));
  double lo = c.x - w, hi = c.x + w;
  // the segment region lies on the side of the chord where the arc bulges; the
  // cut uses the chord-crossing expression so both events coincide exactly
  Point d = b - a;
  double s = e.curvature > 0 ? -1.0 : 1.0;  // required sign of cross(d, p - a)
  if (d.y == 0.0) {
    if (s * d.x * (y - a.y) <= 0) return;
  } else {
    double x0 = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (s * -d.y > 0)
      lo = std::max(lo, x0);
    else
      hi = std::min(hi, x0);
  }
  if (lo < hi) {
    ev.push_back(lo);
    ev.push_back(hi);
  }
}

Grid raster(const std::vector<ArcEdge>& edges, const Box& bb, double step, Point phase) {
  if (!(step > 0) || !std::isfinite(step)) throw InvalidParameter("grid step must be positive");
  double span = std::min(bb.x1 - bb.x0, bb.y1 - bb.y0);
  if (!(span / step >= 16.0))
    throw ResolutionTooCoarse("grid step " + std::to_string(step) + " gives fewer than 16 cells across");
  if (!(phase.x >= 0 && phase.x < 1 && phase.y >= 0 && phase.y < 1))
    throw InvalidParameter("grid phase must lie in [0,1)");
  Grid g;
  g.step = step;
  g.origin = {bb.x0 - (2 + phase.x) * step, bb.y0 - (2 + phase.y) * step};
  g.width = static_cast<int>(std::ceil((bb.x1 - bb.x0) / step)) + 5;
  g.height = static_cast<int>(std::ceil((bb.y1 - bb.y0) / step)) + 5;
  if (static_cast<double>(g.width) * g.height > 4.0e8) throw InvalidParameter("grid too large");
  g.occupancy.assign(static_cast<std::size_t>(g.width) * g.height, 0);

  std::vector<std::vector<std::uint32_t>> rows(g.height);
  for (std::uint32_t k = 0; k < edges.size(); ++k) {
    Box b = edges[k].bbox();
    int j0 = std::max(0, static_cast<int>(std::floor((b.y0 - g.origin.y) / step - 0.5)));
    int j1 = std::min(g.height - 1, static_cast<int>(std::ceil((b.y1 - g.origin.y) / step - 0.5)));
    for (int j = j0; j <= j1; ++j) rows[j].push_back(k);
  }
  parallel_for(
      static_cast<std::size_t>(g.height),
      [&](std::size_t lo, std::size_t hi) {
        std::vector<double> ev;
        for (std::size_t j = lo; j < hi; ++j) {
          double y = g.origin.y + (static_cast<double>(j) + 0.5) * step;
          ev.clear();
          for (auto k : rows[j]) row_events(edges[k], y, ev);
          std::sort(ev.begin(), ev.end());
          std::size_t p = 0;
          for (int i = 0; i < g.width; ++i) {
            double x = g.origin.x + (i + 0.5) * step;
            while (p < ev.size() && ev[p] < x) ++p;
            g.occupancy[g.index(i, static_cast<int>(j))] = p % 2;
          }
        }
      },
      16);
  return g;
}

// lower envelope of parabolas (Felzenszwalb and Huttenlocher); f finite
void dt1(const double* f, double* d, int n, std::vector<int>& v, std::vector<double>& z) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  v.assign(n, 0);
  z.assign(n + 1, 0.0);
  int k = 0;
  z[0] = -inf;
  z[1] = inf;
  for (int q = 1; q < n; ++q) {
    auto meet = [&](int p) { return ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p)); };
    double s = meet(v[k]);
    while (s <= z[k]) s = meet(v[--k]);
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = inf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

}  // namespace

Grid rasterize(const ArcGon& g, double step, Point phase) {
  validate(g);
  return raster(g.edges, bbox(g), step, phase);
}

Grid rasterize(const RegionSet& s, double step, Point phase) {
  std::vector<ArcEdge> all;
  for (const auto& c : s.components) {
    validate(c);
    all.insert(all.end(), c.edges.begin(), c.edges.end());
  }
  if (all.empty()) throw EmptyRegion("rasterizing an empty region");
  return raster(all, bbox(s), step, phase);
}

void distance_transform(Grid& g) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  int W = g.width, Hh = g.height;
  std::vector<double> sq(static_cast<std::size_t>(W) * Hh);
  // stands in for "no empty cell in this column"; exceeds every real squared distance
  const double big = 4.0 * (double(W) + Hh) * (double(W) + Hh);
  // columns: squared distance to the nearest empty cell; margins make every column reach one
  parallel_for(
      static_cast<std::size_t>(W),
      [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          int ii = static_cast<int>(i);
          double run = inf;
          for (int j = 0; j < Hh; ++j) {
            run = g.occupied(ii, j) ? run + 1 : 0.0;
            sq[g.index(ii, j)] = run;
          }
          run = inf;
          for (int j = Hh - 1; j >= 0; --j) {
            run = g.occupied(ii, j) ? run + 1 : 0.0;
            double& c = sq[g.index(ii, j)];
            c = std::min(c, run);
          }
          for (int j = 0; j < Hh; ++j) {
            double& c = sq[g.index(ii, j)];
            c = std::isinf(c) ? big : c * c;
          }
        }
      },
      16);
  g.distance.assign(sq.size(), 0.0);
  parallel_for(
      static_cast<std::size_t>(Hh),
      [&](std::size_t lo, std::size_t hi) {
        std::vector<double> d(W), z;
        std::vector<int> v;
        for (std::size_t j = lo; j < hi; ++j) {
          const double* row = &sq[g.index(0, static_cast<int>(j))];
          dt1(row, d.data(), W, v, z);
          for (int i = 0; i < W; ++i)
            g.distance[g.index(i, static_cast<int>(j))] = d[i] >= big ? inf : std::sqrt(d[i]) * g.step;
        }
      },
      16);
}

Grid distance_transform(const Grid& grid) {
  Grid g = grid;
  distance_transform(g);
  return g;
}

namespace {

void need_distance(const Grid& g) {
  if (g.distance.size() != g.occupancy.size()) throw InvalidInput("grid has no distance field");
}

}  // namespace

double grid_inner_area(const Grid& g, double r) {
  need_distance(g);
  double thr = r + 0.5 * g.step;
  std::size_t n = 0;
  for (double d : g.distance) n += d > thr;
  return static_cast<double>(n) * g.step * g.step;
}

GridCheeger grid_cheeger(const Grid& g, double tol) {
  need_distance(g);
  std::vector<double> ds;
  for (double d : g.distance)
    if (d > 0) ds.push_back(d);
  if (ds.empty()) throw EmptyRegion("grid has no occupied cells");
  std::sort(ds.begin(), ds.end());
  double cell = g.step * g.step;
  auto inner = [&](double r) {
    auto it = std::upper_bound(ds.begin(), ds.end(), r + 0.5 * g.step);
    return static_cast<double>(ds.end() - it) * cell;
  };
  constexpr double kPi = 3.14159265358979323846;
  double lo = 0.0, hi = std::sqrt(static_cast<double>(ds.size()) * cell / kPi);
  GridCheeger out;
  while (out.iterations < 200 && hi - lo > tol * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    (kPi * mid * mid - inner(mid) < 0 ? lo : hi) = mid;
    ++out.iterations;
  }
  out.r = 0.5 * (lo + hi);
  out.h = 1.0 / out.r;
  return out;
}

int grid_components(const Grid& g, double r) {
  need_distance(g);
  double thr = r + 0.5 * g.step;
  std::vector<int> label(g.distance.size(), 0);
  std::vector<std::size_t> stack;
  int comps = 0;
  for (std::size_t s = 0; s < g.distance.size(); ++s) {
    if (!(g.distance[s] > thr) || label[s]) continue;
    ++comps;
    label[s] = comps;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      int i = static_cast<int>(c % g.width), j = static_cast<int>(c / g.width);
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        int a = i + di[k], b = j + dj[k];
        if (a < 0 || b < 0 || a >= g.width || b >= g.height) continue;
        std::size_t q = g.index(a, b);
        if (g.distance[q] > thr && !label[q]) {
          label[q] = comps;
          stack.push_back(q);
        }
      }
    }
  }
  return comps;
}

bool grid_connected(const Grid& g, double r) {
  int c = grid_components(g, r);
  if (c == 0) throw EmptyRegion("inner parallel set is empty on the grid");
  return c == 1;
}

void write_pbm(const Grid& g, std::ostream& os) {
  os << "P4\n" << g.width << ' ' << g.height << '\n';
  std::vector<unsigned char> row((g.width + 7) / 8);
  for (int j = g.height - 1; j >= 0; --j) {
    std::fill(row.begin(), row.end(), 0);
    for (int i = 0; i < g.width; ++i)
      if (g.occupied(i, j)) row[i / 8] |= static_cast<unsigned char>(0x80 >> (i % 8));
    os.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

void write_pgm(const Grid& g, std::ostream& os) {
  need_distance(g);
  double mx = *std::max_element(g.distance.begin(), g.distance.end());
  os << "P5\n" << g.width << ' ' << g.height << "\n65535\n";
  for (int j = g.height - 1; j >= 0; --j)
    for (int i = 0; i < g.width; ++i) {
      double v = mx > 0 ? g.distance[g.index(i, j)] / mx : 0.0;
      auto q = static_cast<unsigned>(std::lround(v * 65535.0));
      char b[2] = {static_cast<char>(q >> 8), static_cast<char>(q & 0xff)};
      os.write(b, 2);
    }
}

}  // namespace cheeger
