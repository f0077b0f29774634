#include "cheeger/cmcprofile.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cheeger/errors.hpp"
#include "cheeger/parallel.hpp"

namespace cheeger {

namespace {

// exact integral of phi / sqrt(1 - phi^2) over a piece on which phi is linear
double piece_rise(double len, double pa, double pb) {
  return len * (pa + pb) / (std::sqrt((1 - pa) * (1 + pa)) + std::sqrt((1 - pb) * (1 + pb)));
}

}  // namespace

Profile::Profile(const StaircaseParams& p) : params_(p), stair_(p) {
  const auto& iv = stair_.stage().intervals;
  double H = p.H, ell = p.ell;
  double Hl = H * ell;
  double m = static_cast<double>(iv.size());
  double sigma = H / std::pow(1.0 - p.tau, p.n);
  double u = 0.0;
  for (std::size_t j = 0; j < iv.size(); ++j) {
    double a = iv[j].first * ell, b = iv[j].second * ell;
    if (j == 0) a = 0.0;
    if (j + 1 == iv.size()) b = ell;
    double sa = Hl * (static_cast<double>(j) / m), sb = Hl * (static_cast<double>(j + 1) / m);
    double pa = sa - H * a, pb = sb - H * b;
    if (j == 0) pa = 0.0;
    if (j + 1 == iv.size()) pb = 0.0;
    double du = piece_rise(b - a, pa, pb);
    pieces_.push_back({a, b, u, u + du, pa, pb, H - sigma, true});
    u += du;
    if (j + 1 < iv.size()) {
      double c = iv[j + 1].first * ell;
      double pc = sb - H * c;
      double dg = piece_rise(c - b, pb, pc);
      pieces_.push_back({b, c, u, u + dg, pb, pc, H, false});
      u += dg;
    }
  }
  pieces_.back().u1 = 0.0;
  for (const auto& pc : pieces_) {
    t0s_.push_back(pc.t0);
    chain_.push_back(make_edge({pc.t0, pc.u0}, {pc.t1, pc.u1}, -pc.curvature));
  }
}

std::size_t Profile::piece_index(double t) const {
  if (!(t >= 0.0 && t <= params_.ell)) throw InvalidParameter("t outside [0, ell]");
  auto it = std::upper_bound(t0s_.begin(), t0s_.end(), t);
  return static_cast<std::size_t>(it - t0s_.begin()) - 1;
}

double Profile::u(double t) const {
  const ArcEdge& e = chain_[piece_index(t)];
  if (t == e.start.x) return e.start.y;
  if (t == e.end.x) return e.end.y;
  if (e.is_segment()) {
    double f = (t - e.start.x) / (e.end.x - e.start.x);
    return e.start.y + f * (e.end.y - e.start.y);
  }
  Point c = e.center();
  double rho = e.radius(), dx = t - c.x;
  double h = std::sqrt(std::max(0.0, (rho - dx) * (rho + dx)));
  // graph curvature -e.curvature > 0: cap above the center
  return e.curvature < 0 ? c.y + h : c.y - h;
}

double Profile::flux(double t) const {
  const ArcEdge& e = chain_[piece_index(t)];
  if (e.is_segment()) {
    double sl = (e.end.y - e.start.y) / (e.end.x - e.start.x);
    return sl / std::sqrt(1 + sl * sl);
  }
  return -e.curvature * (e.center().x - t);
}

double Profile::du(double t) const {
  double f = flux(t);
  return f / std::sqrt((1 - f) * (1 + f));
}

Profile u_arc_chain(const StaircaseParams& p) { return Profile(p); }

// ---- quadrature

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& val, double& err) {
  double c = (a + b) / 2, h = (b - a) / 2;
  double fc = f(c);
  double k = fc * kWgk[7], g = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    double x = h * kXgk[i];
    double f1 = f(c - x), f2 = f(c + x);
    k += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) g += kWg[i / 2] * (f1 + f2);
  }
  val = k * h;
  err = std::abs((k - g) * h);
}

template <class F>
double adaptive(const F& f, double a, double b, double tol, int depth = 0) {
  double v, e;
  gk15(f, a, b, v, e);
  if (e <= std::max(tol, 1e-15 * std::abs(v)) || depth >= 40 || b - a <= 1e-15 * std::abs(b))
    return v;
  double m = (a + b) / 2;
  return adaptive(f, a, m, tol / 2, depth + 1) + adaptive(f, m, b, tol / 2, depth + 1);
}

std::vector<double> stage_breaks(const Staircase& st) {
  const auto& p = st.params();
  std::vector<double> br{0.0};
  for (const auto& [a, b] : st.stage().intervals) {
    if (a * p.ell > br.back()) br.push_back(a * p.ell);
    if (b * p.ell > br.back()) br.push_back(b * p.ell);
  }
  br.back() = p.ell;
  return br;
}

auto integrand(const Staircase& st) {
  return [&st](double r) {
    double H = st.params().H;
    double phi = st(std::clamp(r, 0.0, st.params().ell)) - H * r;
    return phi / std::sqrt((1 - phi) * (1 + phi));
  };
}

}  // namespace

double u_quadrature(const StaircaseParams& p, double t, double tol) {
  if (!(p.H * p.ell < 2) && !p.allow_wide) throw InvalidParameter("H*ell must be below 2");
  if (!(tol > 0)) throw InvalidParameter("tol must be positive");
  return QuadratureProfile(p, tol)(t);
}

QuadratureProfile::QuadratureProfile(const StaircaseParams& p, double tol)
    : params_(p), stair_(p), tol_(tol) {
  if (!(tol > 0)) throw InvalidParameter("tol must be positive");
  breaks_ = stage_breaks(stair_);
  auto f = integrand(stair_);
  std::size_t m = breaks_.size() - 1;
  std::vector<double> parts(m);
  double local = tol / static_cast<double>(2 * m);
  parallel_for(m, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) parts[i] = adaptive(f, breaks_[i], breaks_[i + 1], local);
  });
  cum_.assign(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) cum_[i + 1] = cum_[i] + parts[i];
}

double QuadratureProfile::operator()(double t) const {
  if (!(t >= 0.0 && t <= params_.ell)) throw InvalidParameter("t outside [0, ell]");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
  if (i + 1 >= breaks_.size()) return cum_.back();
  if (t == breaks_[i]) return cum_[i];
  auto f = integrand(stair_);
  return cum_[i] + adaptive(f, breaks_[i], t, tol_ / 2);
}

// ---- certificates

double tangent_potential(const Profile& prof, double t, double r) {
  double H = prof.params().H;
  double x = prof.staircase()(t) - H * r;
  return prof.u(r) - std::sqrt(std::max(0.0, (1 - x) * (1 + x))) / H;
}

TangentBallCertificate tangent_ball(const Profile& prof, double t, int grid, double tol) {
  const auto& p = prof.params();
  if (!(t > 0.0 && t < p.ell)) throw InvalidParameter("t must lie in (0, ell)");
  double H = p.H;
  double s = prof.staircase()(t);
  double phi = s - H * t;
  double ut = prof.u(t);
  TangentBallCertificate c;
  c.t = t;
  c.radius = 1.0 / H;
  c.center = {s / H, ut - std::sqrt((1 - phi) * (1 + phi)) / H};
  double lo = std::max(0.0, (s - 1) / H), hi = std::min(p.ell, (s + 1) / H);
  double base = tangent_potential(prof, t, t);
  double clear = 0.0;
  for (int k = 0; k < grid; ++k) {
    double r = lo + (hi - lo) * (k + 0.5) / grid;
    clear = std::min(clear, tangent_potential(prof, t, r) - base);
  }
  c.clearance = clear;
  c.contained = clear >= -tol;
  return c;
}

TangentBallCertificate tangent_ball(const StaircaseParams& p, double t, int grid, double tol) {
  return tangent_ball(Profile(p), t, grid, tol);
}

AngleReport arc_angles(const Profile& prof) {
  const auto& p = prof.params();
  if (p.n < 1) throw InvalidParameter("angles need a stage n >= 1");
  AngleReport r;
  std::size_t gaps = 0;
  std::size_t central = (std::size_t{1} << (p.n - 1)) - 1;
  for (const auto& pc : prof.pieces()) {
    if (pc.stage) continue;
    double c = std::hypot(pc.t1 - pc.t0, pc.u1 - pc.u0);
    double a = 2 * std::asin(std::min(1.0, p.H * c / 2));
    double alt = std::asin(pc.phi0) - std::asin(pc.phi1);
    r.max_crosscheck = std::max(r.max_crosscheck, std::abs(a - alt));
    r.angles.push_back(a);
    if (gaps == central)
      r.central_angle = a;
    else
      r.max_noncentral = std::max(r.max_noncentral, a);
    ++gaps;
  }
  return r;
}

AngleReport arc_angles(const StaircaseParams& p) { return arc_angles(Profile(p)); }

double holder_modulus(const Profile& prof, double exponent, int levels, int pairs,
                      std::uint64_t seed) {
  double ell = prof.params().ell;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double best = 0.0;
  for (int k = 1; k <= levels; ++k) {
    double h = std::ldexp(ell, -k);
    for (int i = 0; i < pairs; ++i) {
      double t1 = uni(rng) * (ell - h);
      double t2 = t1 + h;
      best = std::max(best, std::abs(prof.du(t1) - prof.du(t2)) / std::pow(h, exponent));
    }
  }
  return best;
}

}  // namespace cheeger
