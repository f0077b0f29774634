#pragma once

#include <utility>
#include <vector>

#include "cheeger/point.hpp"

namespace cheeger {

using Interval = std::pair<double, double>;

struct CantorStage {
  double tau = 1.0 / 3.0;
  int n = 0;
  std::vector<Interval> intervals;  // sorted, disjoint, inside [0,1]

  double total_length() const;
};

constexpr int kMaxCantorStage = 22;

CantorStage cantor_stage(double tau, int n);

// log 2 / log(2 / (1 - tau))
double alpha(double tau);

struct StaircaseParams {
  double H = 1.0;
  double ell = 1.0;
  double tau = 1.0 / 3.0;
  int n = 0;
  // admit H*ell >= 2 (the integrand may then be singular)
  bool allow_wide = false;
};

void validate(const StaircaseParams& p);

// s_{n,tau}(t; H, ell) = H ell s_n(t / ell), built once for repeated evaluation.
class Staircase {
 public:
  explicit Staircase(const StaircaseParams& p);
  double operator()(double t) const;
  const StaircaseParams& params() const { return p_; }
  const CantorStage& stage() const { return stage_; }

 private:
  StaircaseParams p_;
  CantorStage stage_;
  std::vector<double> starts_;
};

double staircase_eval(const StaircaseParams& p, double t);

struct DimensionReport {
  std::vector<int> scales;
  std::vector<long long> counts;
  double slope = 0.0;
  double r2 = 0.0;
};

// Half-open dyadic cells [k 2^-j, (k+1) 2^-j).
long long box_count(const std::vector<Interval>& intervals, int j);
long long box_count(const std::vector<double>& points, int j);
long long box_count(const std::vector<Point>& points, int j);

DimensionReport estimate_dimension(const std::vector<Interval>& intervals, int j_min, int j_max);
DimensionReport estimate_dimension(const std::vector<double>& points, int j_min, int j_max);
DimensionReport estimate_dimension(const std::vector<Point>& points, int j_min, int j_max);

}  // namespace cheeger
