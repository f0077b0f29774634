#include "cheeger/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cheeger/errors.hpp"
#include "cheeger/gridoracle.hpp"
#include "cheeger/parallel.hpp"

namespace cheeger {

namespace {

constexpr double kPi = 3.14159265358979323846;

CheegerSolution grid_only(const ArcGon& omega, const CheegerOptions& opt, const std::string& why) {
  double step = opt.grid_step > 0 ? opt.grid_step : default_grid_step(bbox(omega));
  Grid g = rasterize(omega, step);
  distance_transform(g);
  GridCheeger gc = grid_cheeger(g);
  CheegerSolution s;
  s.r = gc.r;
  s.h = gc.h;
  s.iterations = gc.iterations;
  s.used_grid_fallback = true;
  s.residual = std::abs(kPi * gc.r * gc.r - grid_inner_area(g, gc.r));
  int comps = grid_components(g, gc.r);
  s.inner_components = static_cast<std::size_t>(comps);
  s.no_neck_certified = comps == 1;
  s.warnings.push_back("exact erosion failed (" + why + "); grid-only estimate at step " +
                       std::to_string(step));
  return s;
}

}  // namespace

CheegerSolution cheeger_constant(const ArcGon& omega, const CheegerOptions& opt) {
  validate(omega);
  if (!(opt.tol > 0)) throw InvalidParameter("tol must be positive");
  double A = area(omega);
  auto f = [&](double r) { return kPi * r * r - area(inner_parallel(omega, r)); };

  CheegerSolution s;
  double lo = 0.0, hi = std::sqrt(A / kPi);
  double r = hi, fr = std::numeric_limits<double>::infinity();
  try {
    double best = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opt.max_iterations; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = f(mid);
      ++s.iterations;
      if (std::abs(fm) < best) best = std::abs(fm), r = mid, fr = fm;
      if (std::abs(fm) <= opt.tol) break;
      (fm < 0 ? lo : hi) = mid;
      if (hi - lo <= 2 * std::numeric_limits<double>::epsilon() * hi) break;
    }
  } catch (const FallbackRequired& e) {
    if (!opt.grid_fallback) throw;
    return grid_only(omega, opt, e.what());
  }
  s.r = r;
  s.h = 1.0 / r;
  s.residual = std::abs(fr);

  RegionSet inner = inner_parallel(omega, r);
  s.inner_components = inner.components.size();
  s.no_neck_certified = inner.components.size() == 1;
  if (inner.empty()) throw NumericalFailure("inner parallel set is empty at the root");
  if (s.no_neck_certified) {
    s.cheeger_set = minkowski_disc(inner, r);
  } else {
    RegionSet d = dilate(inner, r);
    double best = std::numeric_limits<double>::infinity();
    for (auto& c : d.components) {
      double q = cheeger_ratio(c);
      if (q < best) best = q, s.cheeger_set = c;
    }
    s.warnings.push_back("inner parallel set has " + std::to_string(inner.components.size()) +
                         " components; neck condition not certified");
  }
  if (s.residual > opt.tol)
    s.warnings.push_back("residual " + std::to_string(s.residual) + " above tolerance");
  return s;
}

CheegerSolution cheeger_constant(const RegionSet& omega, const CheegerOptions& opt) {
  if (omega.empty()) throw EmptyRegion("no components");
  CheegerSolution best;
  best.h = std::numeric_limits<double>::infinity();
  for (const auto& c : omega.components) {
    CheegerSolution s = cheeger_constant(c, opt);
    if (s.h < best.h) best = std::move(s);
  }
  return best;
}

SelfCheegerReport verify_self_cheeger(const ArcGon& E, int samples, double tol) {
  validate(E);
  SelfCheegerReport rep;
  rep.samples = samples;
  rep.r_star = area(E) / perimeter(E);
  if (tol < 0) tol = 1e-9 * std::max(1.0, bbox(E).diagonal());
  EdgeIndex idx(E);
  auto pts = sample_boundary(E, samples);
  std::size_t m = E.edges.size();
  double r = rep.r_star;
  auto outward = [](Point t) { return Point{t.y, -t.x}; };
  auto fits = [&](Point x, Point nu) {
    Point c = x - r * nu;
    return idx.contains(c) && idx.distance(c) >= r - tol;
  };
  std::vector<char> ok(pts.size(), 0);
  parallel_for(
      pts.size(),
      [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
          const auto& b = pts[k];
          if (fits(b.p, b.normal)) {
            ok[k] = 1;
            continue;
          }
          const ArcEdge& e = E.edges[b.edge];
          double jt = 1e-12 * std::max(1.0, idx.scale());
          std::vector<Point> alt;
          if (dist(b.p, e.start) <= jt) {
            alt.push_back(outward(e.tangent_start()));
            alt.push_back(outward(E.edges[(b.edge + m - 1) % m].tangent_end()));
          }
          if (dist(b.p, e.end) <= jt) {
            alt.push_back(outward(e.tangent_end()));
            alt.push_back(outward(E.edges[(b.edge + 1) % m].tangent_start()));
          }
          for (Point nu : alt)
            if (fits(b.p, nu)) ok[k] = 1;
        }
      },
      16);
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (!ok[k]) rep.failures.push_back(pts[k].p);
  return rep;
}

SteinerResiduals steiner_check(const ArcGon& G, double r) {
  validate(G);
  ArcGon D = minkowski_disc(G, r);
  SteinerResiduals s;
  s.area = std::abs(area(D) - area(G) - perimeter(G) * r - kPi * r * r);
  s.perimeter = std::abs(perimeter(D) - perimeter(G) - 2 * kPi * r);
  return s;
}

double cheeger_ratio(const ArcGon& E) {
  double a = area(E);
  if (!(a > 0)) throw InvalidGeometry("zero area");
  return perimeter(E) / a;
}

double cheeger_ratio(const RegionSet& s) {
  if (s.empty()) throw EmptyRegion("no components");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : s.components) best = std::min(best, cheeger_ratio(c));
  return best;
}

}  // namespace cheeger
