#pragma once

#include <cstdint>
#include <vector>

#include "cheeger/arcgeom.hpp"
#include "cheeger/cantor.hpp"

namespace cheeger {

// One circular piece of the graph of u between consecutive breakpoints.
struct ProfilePiece {
  double t0, t1;
  double u0, u1;
  double phi0, phi1;  // flux s - H t at the ends
  double curvature;   // graph curvature: H on gaps, H - H (1 - tau)^-n on stage intervals
  bool stage;
};

// Exact piecewise-circular graph of u_{n,tau}(.; H, ell) over [0, ell].
class Profile {
 public:
  explicit Profile(const StaircaseParams& p);

  const StaircaseParams& params() const { return params_; }
  const Staircase& staircase() const { return stair_; }
  const std::vector<ProfilePiece>& pieces() const { return pieces_; }
  // graph of u traversed left to right; edge curvature is minus the graph curvature
  const std::vector<ArcEdge>& arc_chain() const { return chain_; }

  std::size_t piece_index(double t) const;
  // value of u from the arc geometry
  double u(double t) const;
  // u'/sqrt(1+u'^2) from the arc geometry
  double flux(double t) const;
  double du(double t) const;

 private:
  StaircaseParams params_;
  Staircase stair_;
  std::vector<ProfilePiece> pieces_;
  std::vector<ArcEdge> chain_;
  std::vector<double> t0s_;
};

Profile u_arc_chain(const StaircaseParams& p);

// Adaptive Gauss-Kronrod integral of (s - H r)/sqrt(1 - (s - H r)^2) over [0, t],
// split at the stage endpoints.
double u_quadrature(const StaircaseParams& p, double t, double tol);

// Quadrature evaluator with cached partial integrals at the breakpoints.
class QuadratureProfile {
 public:
  QuadratureProfile(const StaircaseParams& p, double tol);
  double operator()(double t) const;
  const std::vector<double>& breakpoints() const { return breaks_; }

 private:
  StaircaseParams params_;
  Staircase stair_;
  double tol_;
  std::vector<double> breaks_;
  std::vector<double> cum_;
};

struct TangentBallCertificate {
  double t = 0.0;
  Point center;
  double radius = 0.0;
  bool contained = false;
  // min over the r-grid of u(r) minus the top of the ball; zero at the tangency
  double clearance = 0.0;
};

TangentBallCertificate tangent_ball(const Profile& prof, double t, int grid = 4096,
                                    double tol = 1e-9);
TangentBallCertificate tangent_ball(const StaircaseParams& p, double t, int grid = 4096,
                                    double tol = 1e-9);

// P_t(r) = u(r) - sqrt(1 - (s(t) - H r)^2) / H; minimized over r at r = t.
double tangent_potential(const Profile& prof, double t, double r);

struct AngleReport {
  std::vector<double> angles;  // per gap, left to right
  double central_angle = 0.0;
  double max_noncentral = 0.0;
  // max |2 asin(H c / 2) - (asin(phi_a) - asin(phi_b))| over gaps
  double max_crosscheck = 0.0;
};

AngleReport arc_angles(const StaircaseParams& p);
AngleReport arc_angles(const Profile& prof);

// max |u'(t1) - u'(t2)| / |t1 - t2|^exponent over `pairs` random pairs at
// dyadic separations down to ell 2^-levels.
double holder_modulus(const Profile& prof, double exponent, int levels, int pairs,
                      std::uint64_t seed = 1);

}  // namespace cheeger
