#include "cheeger/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cheeger/errors.hpp"

namespace cheeger {

double CantorStage::total_length() const {
  double s = 0.0;
  for (const auto& [a, b] : intervals) s += b - a;
  return s;
}

CantorStage cantor_stage(double tau, int n) {
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidParameter("tau must lie in (0,1)");
  if (n < 0 || n > kMaxCantorStage)
    throw InvalidParameter("stage must lie in [0, " + std::to_string(kMaxCantorStage) + "]");
  CantorStage st{tau, n, {{0.0, 1.0}}};
  double keep = (1.0 - tau) / 2;
  for (int k = 0; k < n; ++k) {
    std::vector<Interval> next;
    next.reserve(st.intervals.size() * 2);
    for (const auto& [a, b] : st.intervals) {
      double piece = (b - a) * keep;
      next.push_back({a, a + piece});
      next.push_back({b - piece, b});
    }
    st.intervals.swap(next);
  }
  return st;
}

double alpha(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidParameter("tau must lie in (0,1)");
  return std::log(2.0) / std::log(2.0 / (1.0 - tau));
}

void validate(const StaircaseParams& p) {
  if (!(p.H > 0) || !std::isfinite(p.H)) throw InvalidParameter("H must be positive");
  if (!(p.ell > 0) || !std::isfinite(p.ell)) throw InvalidParameter("ell must be positive");
  if (!(p.tau > 0 && p.tau < 1)) throw InvalidParameter("tau must lie in (0,1)");
  if (p.n < 0 || p.n > kMaxCantorStage) throw InvalidParameter("stage out of range");
  if (!p.allow_wide && !(p.H * p.ell < 2))
    throw InvalidParameter("H*ell must be below 2");
}

Staircase::Staircase(const StaircaseParams& p) : p_(p) {
  validate(p);
  stage_ = cantor_stage(p.tau, p.n);
  starts_.reserve(stage_.intervals.size());
  for (const auto& iv : stage_.intervals) starts_.push_back(iv.first);
}

double Staircase::operator()(double t) const {
  if (!(t >= 0.0 && t <= p_.ell)) throw InvalidParameter("t outside [0, ell]");
  double x = t / p_.ell;
  auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
  std::size_t j = static_cast<std::size_t>(it - starts_.begin()) - 1;
  const auto& [a, b] = stage_.intervals[j];
  double frac = std::clamp((x - a) / (b - a), 0.0, 1.0);
  double s = (static_cast<double>(j) + frac) / static_cast<double>(stage_.intervals.size());
  return p_.H * p_.ell * s;
}

double staircase_eval(const StaircaseParams& p, double t) { return Staircase(p)(t); }

long long box_count(const std::vector<Interval>& intervals, int j) {
  std::vector<Interval> iv = intervals;
  std::sort(iv.begin(), iv.end());
  long long count = 0;
  double last = -std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : iv) {
    double lo = std::floor(std::ldexp(a, j)), hi = std::floor(std::ldexp(b, j));
    lo = std::max(lo, last + 1);
    if (hi >= lo) {
      count += static_cast<long long>(hi - lo) + 1;
      last = hi;
    }
  }
  return count;
}

long long box_count(const std::vector<double>& points, int j) {
  std::vector<double> cells;
  cells.reserve(points.size());
  for (double x : points) cells.push_back(std::floor(std::ldexp(x, j)));
  std::sort(cells.begin(), cells.end());
  return std::unique(cells.begin(), cells.end()) - cells.begin();
}

long long box_count(const std::vector<Point>& points, int j) {
  std::vector<std::pair<double, double>> cells;
  cells.reserve(points.size());
  for (const auto& p : points)
    cells.push_back({std::floor(std::ldexp(p.x, j)), std::floor(std::ldexp(p.y, j))});
  std::sort(cells.begin(), cells.end());
  return std::unique(cells.begin(), cells.end()) - cells.begin();
}

namespace {

template <class Set>
DimensionReport fit(const Set& set, int j_min, int j_max) {
  if (j_max - j_min < 2 || j_min < 0)
    throw InsufficientScales("need at least 3 dyadic scales with 0 <= j_min < j_max");
  if (set.empty()) throw InvalidParameter("empty set");
  DimensionReport r;
  for (int j = j_min; j <= j_max; ++j) {
    r.scales.push_back(j);
    r.counts.push_back(box_count(set, j));
  }
  double n = static_cast<double>(r.scales.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < r.scales.size(); ++i) {
    sx += r.scales[i];
    sy += std::log2(static_cast<double>(r.counts[i]));
  }
  double mx = sx / n, my = sy / n, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < r.scales.size(); ++i) {
    double dx = r.scales[i] - mx, dy = std::log2(static_cast<double>(r.counts[i])) - my;
    sxx += dx * dx, sxy += dx * dy, syy += dy * dy;
  }
  r.slope = sxy / sxx;
  double ss_res = syy - r.slope * sxy;
  r.r2 = syy > 0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return r;
}

}  // namespace

DimensionReport estimate_dimension(const std::vector<Interval>& intervals, int j_min, int j_max) {
  return fit(intervals, j_min, j_max);
}
DimensionReport estimate_dimension(const std::vector<double>& points, int j_min, int j_max) {
  return fit(points, j_min, j_max);
}
DimensionReport estimate_dimension(const std::vector<Point>& points, int j_min, int j_max) {
  return fit(points, j_min, j_max);
}

}  // namespace cheeger
