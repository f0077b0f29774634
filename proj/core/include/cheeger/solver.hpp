#pragma once

#include <string>
#include <vector>

#include "cheeger/arcgeom.hpp"

namespace cheeger {

struct CheegerOptions {
  double tol = 1e-10;          // residual |pi r^2 - area(inner_parallel(Omega, r))|
  int max_iterations = 200;
  bool grid_fallback = false;  // rasterize when the exact erosion cannot be assembled
  double grid_step = 0.0;      // 0: bounding-box diagonal / 2048
};

struct CheegerSolution {
  double r = 0.0;
  double h = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool no_neck_certified = false;
  bool used_grid_fallback = false;
  std::size_t inner_components = 0;
  ArcGon cheeger_set;
  std::vector<std::string> warnings;
};

// Bisection on f(r) = pi r^2 - area(Omega^r) over [0, sqrt(area / pi)], then
// the Cheeger set Omega^r + B_r. With a disconnected Omega^r the best ratio
// component is returned and no_neck_certified is false.
CheegerSolution cheeger_constant(const ArcGon& omega, const CheegerOptions& opt = {});
// minimum over components
CheegerSolution cheeger_constant(const RegionSet& omega, const CheegerOptions& opt = {});

struct SelfCheegerReport {
  double r_star = 0.0;
  int samples = 0;
  std::vector<Point> failures;
  bool pass() const { return failures.empty(); }
};

// For each boundary sample x: is there a disc of radius area/perimeter inside E
// touching x? Corners try the normal of each adjacent edge as well as their mean.
SelfCheegerReport verify_self_cheeger(const ArcGon& E, int samples, double tol = -1.0);

struct SteinerResiduals {
  double area = 0.0;
  double perimeter = 0.0;
};
SteinerResiduals steiner_check(const ArcGon& G, double r);

double cheeger_ratio(const ArcGon& E);
double cheeger_ratio(const RegionSet& s);

}  // namespace cheeger
