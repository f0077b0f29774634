#pragma once

#include <string>
#include <vector>

#include "cheeger/arcgeom.hpp"
#include "cheeger/cantor.hpp"
#include "cheeger/cmcprofile.hpp"

namespace cheeger {

struct KgonSpec {
  int k = 6;
  double H = 1.0;
  double rho = 1.0;  // edge of the regular k-gon
};

// beta with rho = (2/H) sin(beta/2)
double kgon_beta(const KgonSpec& s);
ArcGon build_kgon_domain(const KgonSpec& s);
// Area of E(rho)^{1/H}; zero while beta <= 2 pi / k.
double inner_area_kgon(const KgonSpec& s);
// Limit of inner_area_kgon as rho -> 2/H.
double inner_area_kgon_limit(int k, double H);
double solve_rho0(int k, double H, double tol = 1e-13);

struct CantorDomainSpec {
  StaircaseParams params;
  double corner_radius() const { return 1.0 / params.H; }
};

ArcGon build_cantor_domain(const CantorDomainSpec& s);
double solve_ell0(double tau, int n, double H, double tol = 1e-12);

struct PerturbationSpec {
  double delta = 0.0;
  int bump_samples = 8;  // arc pieces per bumped gap or corner
};

struct ContactSet {
  std::vector<Point> points;
  // arclength intervals on the boundary of E, measured from its first vertex
  std::vector<Interval> intervals_param;
  double boundary_length = 0.0;
  std::vector<std::string> warnings;

  std::size_t size() const { return points.size() + intervals_param.size(); }
};

struct PerturbedDomain {
  ArcGon omega;
  ContactSet contact;
  double delta = 0.0;
  double delta_max = 0.0;
};

// Lipschitz case: every side between two corners of `base` is replaced by one
// outward arc with sagitta increased by delta; contact is the corner set.
double delta_max(const ArcGon& base);
PerturbedDomain build_perturbed_domain(const ArcGon& base, const PerturbationSpec& p);

// C^{1,alpha} case: the gaps and the corner arcs are raised by delta g with g = 0
// exactly on the stage intervals; contact is the image of the stage-n Cantor set.
double delta_max(const CantorDomainSpec& s);
PerturbedDomain build_perturbed_domain(const CantorDomainSpec& s, const PerturbationSpec& p);

ContactSet contact_set(const ArcGon& E, const ArcGon& omega, double tol = 1e-9);

// smooth bump exp(4 - 1/(x(1-x))) on (0,1), zero outside, peak 1 at x = 1/2
double bump(double x);

// Two discs of radius R with centers 2R + gap apart, joined by a bar of half-width w < R.
ArcGon make_dumbbell(double R, double gap, double w);

}  // namespace cheeger
