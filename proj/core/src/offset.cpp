// Erosion and dilation of arc-gons by offsetting every edge, adding vertex
// joins, splitting at mutual intersections and keeping the sub-pieces that lie
// at the full offset distance from the original boundary.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "cheeger/arcgeom.hpp"
#include "cheeger/parallel.hpp"
#include "pieces.hpp"

namespace cheeger {

using detail::Hit;
using detail::kPi;
using detail::Piece;

namespace {

struct Tolerances {
  double scale;
  double hit;   // intersection parameter slack, length units
  double keep;  // distance deficit still counted as on the offset
  double drop;  // kept pieces shorter than this are discarded
  double join;  // endpoint matching radius
};

// d > 0 offsets to the left of every loop (inward for ccw loops), d < 0 to the right.
std::vector<Piece> raw_offset(const std::vector<std::vector<ArcEdge>>& loops, double d,
                              const Tolerances& tol) {
  std::vector<Piece> out;
  for (const auto& loop : loops) {
    std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const ArcEdge& e = loop[i];
      if (e.is_segment()) {
        Point nl = perp(unit(e.end - e.start));
        out.push_back(Piece::segment(e.start + d * nl, e.end + d * nl));
      } else {
        Piece p = Piece::from_edge(e);
        double rho = p.rho - d * (e.curvature > 0 ? 1.0 : -1.0);
        // offsets through or past the center never reach the eroded boundary:
        // a disc of radius |d| cannot touch an arc of smaller radius from its concave side
        if (rho > tol.drop) out.push_back(Piece::circular(p.c, rho, p.th0, p.sw));
      }
      const ArcEdge& nx = loop[(i + 1) % n];
      Point tin = e.tangent_end(), tout = nx.tangent_start();
      double psi = detail::signed_angle(tin, tout);
      if (std::abs(psi) > 1e-12 && psi * d < 0) {
        Point v = e.end;
        Point r0 = d * perp(tin);
        out.push_back(Piece::circular(v, std::abs(d), std::atan2(r0.y, r0.x), psi));
      }
    }
  }
  return out;
}

std::vector<std::vector<double>> split_params(const std::vector<Piece>& ps, const Tolerances& tol) {
  std::vector<Box> boxes(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) boxes[i] = ps[i].box().padded(tol.hit);
  Bvh bvh(boxes);
  std::vector<std::vector<double>> cuts(ps.size());
  parallel_for(ps.size(), [&](std::size_t lo, std::size_t hi) {
    std::vector<Hit> hits;
    for (std::size_t i = lo; i < hi; ++i) {
      bvh.visit([&](const Box& b) { return b.overlaps(boxes[i]); },
                [&](std::size_t j) {
                  if (j == i) return;
                  hits.clear();
                  bool first = i < j;
                  detail::intersect(first ? ps[i] : ps[j], first ? ps[j] : ps[i], tol.hit, hits);
                  double li = ps[i].length();
                  for (const Hit& h : hits) {
                    double fi = first ? h.fp : h.fq;
                    if (std::min(fi, 1 - fi) * li <= tol.hit) continue;
                    cuts[i].push_back(fi);
                  }
                });
      std::sort(cuts[i].begin(), cuts[i].end());
    }
  });
  return cuts;
}

std::vector<Piece> trim(const std::vector<Piece>& ps, const std::vector<std::vector<double>>& cuts,
                        const EdgeIndex& index, double d, const Tolerances& tol) {
  std::vector<Piece> subs;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    double len = ps[i].length();
    double slack = tol.hit / std::max(len, 1e-300);
    double prev = 0.0;
    for (double f : cuts[i]) {
      if (f - prev <= slack || 1.0 - f <= slack) continue;
      subs.push_back(ps[i].sub(prev, f));
      prev = f;
    }
    subs.push_back(prev == 0.0 ? ps[i] : ps[i].sub(prev, 1.0));
  }
  std::vector<char> keep(subs.size(), 0);
  double target = std::abs(d) - tol.keep;
  parallel_for(subs.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      if (subs[k].length() <= tol.drop) continue;
      keep[k] = index.distance(subs[k].at(0.5)) >= target;
    }
  });
  std::vector<Piece> out;
  for (std::size_t k = 0; k < subs.size(); ++k)
    if (keep[k]) out.push_back(subs[k]);
  return out;
}

// Clips raw pieces to the chunks that may reach the offset distance; distance is
// 1-Lipschitz, so dist(chunk mid) + chunk length / 2 bounds it on the chunk.
std::vector<Piece> prune(const std::vector<Piece>& ps, const EdgeIndex& index, double d,
                         const Tolerances& tol) {
  constexpr int kChunks = 16;
  std::vector<std::pair<int, int>> alive(ps.size(), {-1, -1});
  double target = std::abs(d) - tol.keep;
  parallel_for(ps.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      double len = ps[k].length();
      if (index.distance(ps[k].at(0.5)) + 0.5 * len < target) continue;
      if (len <= 1e-3 * tol.scale) {
        alive[k] = {0, kChunks - 1};
        continue;
      }
      double half = 0.5 * len / kChunks;
      for (int c = 0; c < kChunks; ++c) {
        if (index.distance(ps[k].at((c + 0.5) / kChunks)) + half < target) continue;
        if (alive[k].first < 0) alive[k].first = c;
        alive[k].second = c;
      }
    }
  });
  std::vector<Piece> out;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    auto [c0, c1] = alive[k];
    if (c0 < 0) continue;
    if (c0 == 0 && c1 == kChunks - 1)
      out.push_back(ps[k]);
    else
      out.push_back(ps[k].sub(static_cast<double>(c0) / kChunks, static_cast<double>(c1 + 1) / kChunks));
  }
  return out;
}

std::vector<ArcGon> assemble(const std::vector<Piece>& ps, const Tolerances& tol) {
  double cell = tol.join;
  auto key = [&](Point p) {
    auto ix = static_cast<std::int64_t>(std::floor(p.x / cell));
    auto iy = static_cast<std::int64_t>(std::floor(p.y / cell));
    return std::pair<std::int64_t, std::int64_t>(ix, iy);
  };
  auto hkey = [](std::int64_t ix, std::int64_t iy) {
    return static_cast<std::uint64_t>(ix) * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(iy);
  };
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto [ix, iy] = key(ps[i].a);
    grid[hkey(ix, iy)].push_back(i);
  }
  // candidates leaving the end of piece `cur`, sharpest left turn first
  auto next_pieces = [&](std::size_t cur, std::size_t s, const std::vector<char>& used) {
    Point e = ps[cur].b;
    auto [ix, iy] = key(e);
    Point tin = ps[cur].tangent(1.0);
    std::vector<std::pair<double, std::size_t>> c;
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = grid.find(hkey(ix + dx, iy + dy));
        if (it == grid.end()) continue;
        for (std::size_t j : it->second) {
          if (used[j] && j != s) continue;
          if (dist(ps[j].a, e) > tol.join) continue;
          c.push_back({-detail::signed_angle(tin, ps[j].tangent(0.0)), j});
        }
      }
    std::sort(c.begin(), c.end());
    std::vector<std::size_t> out;
    for (const auto& x : c) out.push_back(x.second);
    return out;
  };

  std::vector<char> used(ps.size(), 0);
  std::vector<ArcGon> loops;
  // Walks that dead-end backtrack to the next candidate; a start piece that
  // closes no loop is dropped when tiny (sliver from near-coincident crossings).
  std::size_t budget = 64 * ps.size() + 4096;
  struct Frame {
    std::size_t piece;
    std::vector<std::size_t> cands;
    std::size_t next = 0;
  };
  for (std::size_t s = 0; s < ps.size(); ++s) {
    if (used[s]) continue;
    used[s] = 1;
    std::vector<Frame> path{{s, next_pieces(s, s, used)}};
    bool closed = false;
    while (!path.empty()) {
      if (budget-- == 0) throw FallbackRequired("offset loop assembly exceeded its search budget");
      Frame& f = path.back();
      if (f.next == f.cands.size()) {
        if (path.size() > 1) used[f.piece] = 0;
        path.pop_back();
        continue;
      }
      std::size_t j = f.cands[f.next++];
      if (j == s) {
        closed = true;
        break;
      }
      used[j] = 1;
      path.push_back({j, next_pieces(j, s, used)});
    }
    if (!closed) {
      if (ps[s].length() > 1e-5 * tol.scale)
        throw FallbackRequired("offset boundary does not close (dangling piece at (" +
                               std::to_string(ps[s].b.x) + ", " + std::to_string(ps[s].b.y) + "))");
      continue;
    }
    std::vector<std::size_t> chain;
    for (const auto& f : path) chain.push_back(f.piece);
    ArcGon g;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const Piece& p = ps[chain[k]];
      Point start = p.a;
      Point end = ps[chain[(k + 1) % chain.size()]].a;
      detail::append_edges(p, start, end, g.edges);
    }
    if (g.edges.size() < 2) continue;
    loops.push_back(std::move(g));
  }
  return loops;
}

RegionSet offset_region(const std::vector<std::vector<ArcEdge>>& loops, double d) {
  Box b;
  std::vector<ArcEdge> all;
  for (const auto& l : loops)
    for (const auto& e : l) {
      b.add(e.bbox());
      all.push_back(e);
    }
  double scale = std::max(b.diagonal(), std::abs(d));
  Tolerances tol{scale, 1e-11 * scale, 1e-11 * scale, 1e-9 * scale, 2e-8 * scale};
  EdgeIndex index(std::move(all));
  std::vector<Piece> raw = prune(raw_offset(loops, d, tol), index, d, tol);
  auto cuts = split_params(raw, tol);
  std::vector<Piece> kept = trim(raw, cuts, index, d, tol);
  std::vector<ArcGon> gons = assemble(kept, tol);
  RegionSet out;
  double min_perimeter = 1e-6 * scale;
  for (auto& g : gons) {
    double a = signed_area(g);
    if (perimeter(g) < min_perimeter) continue;
    if (a <= 0) throw FallbackRequired("offset produced a hole");
    out.components.push_back(std::move(g));
  }
  std::sort(out.components.begin(), out.components.end(), [](const ArcGon& x, const ArcGon& y) {
    Box bx = bbox(x), by = bbox(y);
    return bx.x0 != by.x0 ? bx.x0 < by.x0 : bx.y0 < by.y0;
  });
  return out;
}

}  // namespace

RegionSet inner_parallel(const ArcGon& g, double r) {
  if (!(r > 0) || !std::isfinite(r)) throw InvalidParameter("erosion radius must be positive");
  validate(g);
  return offset_region({g.edges}, r);
}

RegionSet inner_parallel(const RegionSet& s, double r) {
  RegionSet out;
  for (const auto& g : s.components) {
    RegionSet part = inner_parallel(g, r);
    for (auto& c : part.components) out.components.push_back(std::move(c));
  }
  return out;
}

RegionSet dilate(const RegionSet& s, double r) {
  if (!(r > 0) || !std::isfinite(r)) throw InvalidParameter("dilation radius must be positive");
  std::vector<std::vector<ArcEdge>> loops;
  for (const auto& g : s.components) {
    validate(g);
    loops.push_back(g.edges);
  }
  if (loops.empty()) return {};
  return offset_region(loops, -r);
}

ArcGon minkowski_disc(const RegionSet& s, double r) {
  if (s.empty()) throw InvalidParameter("dilation of an empty region");
  RegionSet d = dilate(s, r);
  if (d.components.size() != 1)
    throw NotConnected("dilation has " + std::to_string(d.components.size()) + " components");
  return std::move(d.components.front());
}

ArcGon minkowski_disc(const ArcGon& g, double r) { return minkowski_disc(RegionSet{{g}}, r); }

}  // namespace cheeger
