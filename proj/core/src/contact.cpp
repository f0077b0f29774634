#include <algorithm>
#include <cmath>

#include "cheeger/constructions.hpp"
#include "cheeger/errors.hpp"
#include "pieces.hpp"

namespace cheeger {

ContactSet contact_set(const ArcGon& E, const ArcGon& omega, double tol) {
  validate(E);
  validate(omega);
  if (!(tol > 0)) throw InvalidParameter("tol must be positive");
  EdgeIndex om(omega);

  std::size_t m = E.edges.size();
  std::vector<double> cum(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) cum[i + 1] = cum[i] + E.edges[i].length();

  auto near = [&](Point p) { return om.distance(p) <= tol; };
  auto inside = [&](Point p) { return near(p) || om.contains(p); };
  for (std::size_t i = 0; i < m; ++i)
    for (double f : {0.0, 0.25, 0.5, 0.75})
      if (!inside(E.edges[i].at(f)))
        throw InvalidInput("E is not contained in Omega (edge " + std::to_string(i) + ")");

  std::vector<detail::Piece> opieces;
  for (const auto& e : omega.edges) opieces.push_back(detail::Piece::from_edge(e));

  ContactSet cs;
  cs.boundary_length = cum[m];
  std::vector<Interval> runs;
  std::vector<double> isolated;
  for (std::size_t i = 0; i < m; ++i) {
    const ArcEdge& e = E.edges[i];
    detail::Piece pe = detail::Piece::from_edge(e);
    std::vector<double> fs;
    for (int k = 0; k <= 8; ++k) fs.push_back(k / 8.0);
    Box q = e.bbox().padded(tol);
    std::vector<detail::Hit> hits;
    om.bvh().visit([&](const Box& b) { return b.overlaps(q); },
                   [&](std::size_t j) { detail::intersect(pe, opieces[j], tol, hits); });
    for (const auto& h : hits) fs.push_back(h.fp);
    double len = e.length();
    double snap = tol / std::max(len, tol);
    for (double& f : fs)
      for (double g : {0.0, 1.0})
        if (std::abs(f - g) <= snap) f = g;
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end(), [&](double x, double y) { return y - x <= snap; }), fs.end());

    std::vector<char> flag(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) flag[k] = near(e.at(fs[k]));
    std::vector<char> used(fs.size(), 0);
    for (std::size_t k = 0; k + 1 < fs.size(); ++k) {
      if (flag[k] && flag[k + 1] && near(e.at(0.5 * (fs[k] + fs[k + 1])))) {
        double a = cum[i] + fs[k] * len, b = cum[i] + fs[k + 1] * len;
        if (b - a <= tol) continue;
        if (!runs.empty() && std::abs(runs.back().second - a) <= 1e-12 * cs.boundary_length)
          runs.back().second = b;
        else
          runs.push_back({a, b});
        used[k] = used[k + 1] = 1;
      }
    }
    for (std::size_t k = 0; k < fs.size(); ++k)
      if (flag[k] && !used[k]) isolated.push_back(cum[i] + fs[k] * len);
  }

  // isolated candidates that touch an interval or repeat at a junction
  double eps = std::max(1e-12 * cs.boundary_length, tol);
  std::sort(isolated.begin(), isolated.end());
  std::vector<double> pts;
  for (double s : isolated) {
    bool covered = false;
    for (const auto& [a, b] : runs)
      for (double w : {s, s - cs.boundary_length, s + cs.boundary_length})
        if (w >= a - eps && w <= b + eps) covered = true;
    if (!pts.empty() && s - pts.back() <= eps) covered = true;
    if (!covered) pts.push_back(s);
  }
  if (pts.size() > 1 && cs.boundary_length - pts.back() + pts.front() <= eps) pts.pop_back();

  auto point_at = [&](double s) {
    std::size_t i = static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), s) - cum.begin());
    i = std::min(m, std::max<std::size_t>(i, 1)) - 1;
    double len = E.edges[i].length();
    return E.edges[i].at(std::clamp((s - cum[i]) / len, 0.0, 1.0));
  };
  for (double s : pts) cs.points.push_back(point_at(s));
  cs.intervals_param = runs;
  if (cs.size() == 0)
    cs.warnings.push_back("empty contact set: a Cheeger pair must have at least 2 contact points");
  return cs;
}

}  // namespace cheeger
