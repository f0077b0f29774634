#include "cheeger/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check(const KgonSpec& s) {
  if (s.k < 3) throw InvalidParameter("k must be at least 3");
  if (!(s.H > 0) || !std::isfinite(s.H)) throw InvalidParameter("H must be positive");
  if (!(s.rho >= 1e-9)) throw InvalidParameter("rho below 1e-9 (degenerate polygon)");
  if (!(s.rho < 2.0 / s.H)) throw InvalidParameter("rho must be below 2/H");
}

}  // namespace

// ---- Lipschitz k-gon

double kgon_beta(const KgonSpec& s) {
  check(s);
  return 2 * std::asin(s.H * s.rho / 2);
}

ArcGon build_kgon_domain(const KgonSpec& s) {
  check(s);
  double rc = s.rho / (2 * std::sin(kPi / s.k));
  std::vector<Point> v;
  for (int i = 0; i < s.k; ++i) v.push_back(polar(rc, -kPi / 2 - kPi / s.k + 2 * kPi * i / s.k));
  ArcGon g;
  for (int i = 0; i < s.k; ++i) {
    auto pieces = split_edge(make_edge(v[i], v[(i + 1) % s.k], s.H));
    g.edges.insert(g.edges.end(), pieces.begin(), pieces.end());
  }
  return g;
}

double inner_area_kgon(const KgonSpec& s) {
  double beta = kgon_beta(s);
  double k = s.k, r = 1.0 / s.H;
  if (beta <= 2 * kPi / k) return 0.0;
  double poly = s.rho * s.rho * k / (4 * std::tan(kPi / k));
  double v = poly - k * s.rho * s.rho / (4 * std::tan(beta / 2)) - k * r * r * beta / 2 + kPi * r * r;
  return std::max(0.0, v);
}

double inner_area_kgon_limit(int k, double H) {
  return kPi / (H * H) + k / (H * H) * (1.0 / std::tan(kPi / k) - kPi / 2);
}

double solve_rho0(int k, double H, double tol) {
  if (k < 3) throw InvalidParameter("k must be at least 3");
  if (!(H > 0)) throw InvalidParameter("H must be positive");
  double target = kPi / (H * H);
  if (inner_area_kgon_limit(k, H) <= target)
    throw NoSolution("no root for k = " + std::to_string(k) +
                     ": the eroded area stays below pi/H^2 (a solution needs k >= 6, "
                     "threshold pi/atan(2/pi) ~ 5.5)");
  double lo = 2.0 / H * std::sin(kPi / k), hi = 2.0 / H;
  double mid = lo;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    double f = inner_area_kgon({k, H, mid}) - target;
    if (std::abs(f) <= tol) return mid;
    (f < 0 ? lo : hi) = mid;
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  double f = inner_area_kgon({k, H, mid}) - target;
  if (std::abs(f) <= std::max(tol, 64 * std::numeric_limits<double>::epsilon() * target))
    return mid;
  throw NumericalFailure("rho0 bisection stalled with residual " + std::to_string(f));
}

// ---- C^{1,alpha} Cantor domain

namespace {

struct Side {
  Point base, dir, out;
};

std::array<Side, 4> sides(double ell) {
  return {{{{0, 0}, {1, 0}, {0, -1}},
           {{ell, 0}, {0, 1}, {1, 0}},
           {{ell, ell}, {-1, 0}, {0, 1}},
           {{0, ell}, {0, -1}, {-1, 0}}}};
}

Point side_point(const Side& s, double R, double t, double w) {
  return s.base + t * s.dir + (R + w) * s.out;
}

struct CantorParts {
  ArcGon gon;
  std::vector<std::size_t> stage_edges;  // indices of edges lying on stage intervals
};

CantorParts cantor_parts(const CantorDomainSpec& spec, const Profile& prof) {
  const auto& p = spec.params;
  double R = spec.corner_radius();
  auto sd = sides(p.ell);
  CantorParts parts;
  for (int k = 0; k < 4; ++k) {
    for (const auto& pc : prof.pieces()) {
      Point a = side_point(sd[k], R, pc.t0, pc.u0);
      Point b = side_point(sd[k], R, pc.t1, pc.u1);
      for (const auto& e : split_edge(make_edge(a, b, pc.curvature))) {
        if (pc.stage) parts.stage_edges.push_back(parts.gon.edges.size());
        parts.gon.edges.push_back(e);
      }
    }
    Point a = side_point(sd[k], R, p.ell, 0.0);
    Point b = side_point(sd[(k + 1) % 4], R, 0.0, 0.0);
    parts.gon.edges.push_back(make_edge(a, b, 1.0 / R));
  }
  return parts;
}

}  // namespace

ArcGon build_cantor_domain(const CantorDomainSpec& s) {
  validate(s.params);
  Profile prof(s.params);
  return cantor_parts(s, prof).gon;
}

double solve_ell0(double tau, int n, double H, double tol) {
  if (!(H > 0)) throw InvalidParameter("H must be positive");
  double R = 1.0 / H, target = kPi * R * R;
  auto f = [&](double ell) {
    CantorDomainSpec s{{H, ell, tau, n, false}};
    return area(inner_parallel(build_cantor_domain(s), R)) - target;
  };
  double lo = R / std::sqrt(2.0), hi = std::sqrt(kPi) * R;
  double fhi = f(hi);
  if (std::abs(fhi) <= tol) return hi;
  double flo = f(lo);
  if (std::abs(flo) <= tol) return lo;
  if (!(flo < 0 && fhi > 0))
    throw NumericalFailure("no sign change on [1/(H sqrt2), sqrt(pi)/H]: f(lo) = " +
                           std::to_string(flo) + ", f(hi) = " + std::to_string(fhi));
  double mid = lo, fm = flo;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    fm = f(mid);
    if (std::abs(fm) <= tol) return mid;
    (fm < 0 ? lo : hi) = mid;
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  throw NumericalFailure("ell0 bisection stalled with residual " + std::to_string(fm));
}

// ---- perturbations

double bump(double x) {
  if (!(x > 0.0 && x < 1.0)) return 0.0;
  return std::exp(4.0 - 1.0 / (x * (1.0 - x)));
}

namespace {

// sides of a loop between corners (junctions with a tangent jump)
std::vector<std::pair<std::size_t, std::size_t>> smooth_runs(const ArcGon& g) {
  std::size_t n = g.edges.size();
  std::vector<std::size_t> corners;
  for (std::size_t i = 0; i < n; ++i) {
    const ArcEdge& prev = g.edges[(i + n - 1) % n];
    Point a = prev.tangent_end(), b = g.edges[i].tangent_start();
    if (std::abs(std::atan2(cross(a, b), dot(a, b))) > 1e-9) corners.push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t c = 0; c < corners.size(); ++c) {
    std::size_t b = corners[c], e = corners[(c + 1) % corners.size()];
    if (e <= b) e += n;
    runs.push_back({b, e});
  }
  return runs;
}

double run_sweep(const ArcGon& g, std::pair<std::size_t, std::size_t> run) {
  double s = 0.0;
  for (std::size_t i = run.first; i < run.second; ++i) s += g.edges[i % g.edges.size()].sweep();
  return s;
}

}  // namespace

double delta_max(const ArcGon& base) {
  auto runs = smooth_runs(base);
  if (runs.empty()) throw InvalidParameter("domain has no corners");
  double dm = std::numeric_limits<double>::infinity();
  for (const auto& run : runs) {
    const ArcEdge& e = base.edges[run.first];
    if (e.is_segment()) continue;
    double r = e.radius();
    double beta = std::abs(run_sweep(base, run));
    dm = std::min(dm, r);
    if (beta > kPi / 2) dm = std::min(dm, 2 * r * std::cos(beta / 2));
  }
  if (!std::isfinite(dm)) dm = bbox(base).diagonal();
  return dm;
}

PerturbedDomain build_perturbed_domain(const ArcGon& base, const PerturbationSpec& p) {
  validate(base);
  PerturbedDomain out;
  out.delta = p.delta;
  out.delta_max = delta_max(base);
  if (!(p.delta >= 0)) throw InvalidParameter("delta must be non-negative");
  if (p.delta >= out.delta_max)
    throw DeltaTooLarge("delta " + std::to_string(p.delta) + " >= delta_max " +
                        std::to_string(out.delta_max));
  out.contact.boundary_length = perimeter(base);
  if (p.delta == 0.0) {
    out.omega = base;
    out.contact.intervals_param.push_back({0.0, out.contact.boundary_length});
    return out;
  }
  auto runs = smooth_runs(base);
  std::size_t n = base.edges.size();
  for (const auto& run : runs) {
    Point a = base.edges[run.first % n].start;
    Point b = base.edges[(run.second - 1) % n].end;
    double beta = run_sweep(base, run);
    const ArcEdge& e0 = base.edges[run.first % n];
    double sag = 0.0;
    if (!e0.is_segment()) sag = e0.radius() * (1 - std::cos(beta / 2)) * (beta > 0 ? 1 : -1);
    Point mid = 0.5 * (a + b);
    Point outward = unit(Point{(b - a).y, -(b - a).x});
    Point m = mid + (sag + p.delta) * outward;
    auto arcs = arc_through(a, m, b);
    out.omega.edges.insert(out.omega.edges.end(), arcs.begin(), arcs.end());
    out.contact.points.push_back(a);
  }
  return out;
}

double delta_max(const CantorDomainSpec& s) {
  double R = s.corner_radius();
  double dm = R;
  if (s.params.n >= 1) {
    AngleReport ar = arc_angles(s.params);
    for (double b : ar.angles)
      if (b > kPi / 2) dm = std::min(dm, 2 * R * std::cos(b / 2));
  }
  return dm;
}

PerturbedDomain build_perturbed_domain(const CantorDomainSpec& s, const PerturbationSpec& p) {
  validate(s.params);
  if (p.bump_samples < 2) throw InvalidParameter("bump_samples must be at least 2");
  Profile prof(s.params);
  CantorParts parts = cantor_parts(s, prof);
  const ArcGon& E = parts.gon;
  PerturbedDomain out;
  out.delta = p.delta;
  out.delta_max = delta_max(s);
  if (!(p.delta >= 0)) throw InvalidParameter("delta must be non-negative");
  if (p.delta >= out.delta_max)
    throw DeltaTooLarge("delta " + std::to_string(p.delta) + " >= delta_max " +
                        std::to_string(out.delta_max));
  std::vector<double> cum(E.edges.size() + 1, 0.0);
  for (std::size_t i = 0; i < E.edges.size(); ++i) cum[i + 1] = cum[i] + E.edges[i].length();
  out.contact.boundary_length = cum.back();
  if (p.delta == 0.0) {
    out.omega = E;
    out.contact.intervals_param.push_back({0.0, cum.back()});
    return out;
  }
  for (std::size_t i : parts.stage_edges) {
    if (!out.contact.intervals_param.empty() && out.contact.intervals_param.back().second == cum[i])
      out.contact.intervals_param.back().second = cum[i + 1];
    else
      out.contact.intervals_param.push_back({cum[i], cum[i + 1]});
  }

  const auto& sp = s.params;
  double R = s.corner_radius(), H = sp.H;
  double central = sp.ell * sp.tau;
  auto sd = sides(sp.ell);
  int M = p.bump_samples;
  ArcGon& om = out.omega;
  auto push_curve = [&](const std::vector<Point>& pts) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      auto pieces = split_edge(make_edge(pts[i], pts[i + 1], H));
      om.edges.insert(om.edges.end(), pieces.begin(), pieces.end());
    }
  };
  for (int k = 0; k < 4; ++k) {
    for (const auto& pc : prof.pieces()) {
      Point a = side_point(sd[k], R, pc.t0, pc.u0);
      Point b = side_point(sd[k], R, pc.t1, pc.u1);
      if (pc.stage) {
        auto pieces = split_edge(make_edge(a, b, pc.curvature));
        om.edges.insert(om.edges.end(), pieces.begin(), pieces.end());
        continue;
      }
      double w = (pc.t1 - pc.t0) / central;
      double amp = p.delta * w * w;
      std::vector<Point> pts{a};
      for (int j = 1; j < M; ++j) {
        double x = static_cast<double>(j) / M;
        double t = pc.t0 + x * (pc.t1 - pc.t0);
        pts.push_back(side_point(sd[k], R, t, prof.u(t) + amp * bump(x)));
      }
      pts.push_back(b);
      push_curve(pts);
    }
    // corner surgery: radial bump of height delta on the quarter circle
    Point c = sd[(k + 1) % 4].base;
    Point a = side_point(sd[k], R, sp.ell, 0.0);
    Point b = side_point(sd[(k + 1) % 4], R, 0.0, 0.0);
    double t0 = std::atan2((a - c).y, (a - c).x);
    std::vector<Point> pts{a};
    for (int j = 1; j < M; ++j) {
      double x = static_cast<double>(j) / M;
      pts.push_back(c + polar(R + p.delta * bump(x), t0 + x * kPi / 2));
    }
    pts.push_back(b);
    push_curve(pts);
  }
  return out;
}

ArcGon make_dumbbell(double R, double gap, double w) {
  if (!(R > 0) || !(gap > 0) || !(w > 0) || !(w < R)) throw InvalidParameter("dumbbell needs R, gap > 0 and 0 < w < R");
  double c = R + gap / 2, a = std::asin(w / R);
  ArcGon g;
  auto right = make_arc({c, 0}, R, -kPi + a, 2 * kPi - 2 * a);
  auto left = make_arc({-c, 0}, R, a, 2 * kPi - 2 * a);
  g.edges = right;
  g.edges.push_back(make_edge(right.back().end, left.front().start, 0.0));
  g.edges.insert(g.edges.end(), left.begin(), left.end());
  g.edges.push_back(make_edge(left.back().end, right.front().start, 0.0));
  return g;
}

}  // namespace cheeger
