#include <gtest/gtest.h>

#include <limits>
#include <sstream>
#include <utility>

#include "cheeger/constructions.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/gridoracle.hpp"
#include "support/suite.hpp"

using namespace cheeger;
using testsupport::kPi;

namespace {

Grid blank(int w, int h) {
  Grid g;
  g.step = 1.0;
  g.width = w;
  g.height = h;
  g.occupancy.assign(static_cast<std::size_t>(w) * h, 0);
  return g;
}

}  // namespace

TEST(Raster, AreaExamples) {
  Grid sq = rasterize(make_rect(0, 0, 1, 1), 1.0 / 256);
  EXPECT_NEAR(sq.occupied_area(), 1.0, 4.0 / 256);
  Grid d = rasterize(make_disc({0, 0}, 1), 1.0 / 512);
  EXPECT_NEAR(d.occupied_area(), kPi, 2 * kPi / 512);
  EXPECT_THROW(rasterize(make_rect(0, 0, 1, 1), 0.1), ResolutionTooCoarse);
  EXPECT_THROW(rasterize(make_rect(0, 0, 1, 1), -1), InvalidParameter);
  EXPECT_THROW(rasterize(make_rect(0, 0, 1, 1), 0.01, {1.0, 0.0}), InvalidParameter);
  EXPECT_THROW(rasterize(RegionSet{}, 0.01), EmptyRegion);
}

TEST(Raster, MarginCellsAreEmpty) {
  Grid g = rasterize(make_disc({0, 0}, 1), 1.0 / 64, {0.3, 0.7});
  for (int i = 0; i < g.width; ++i) {
    EXPECT_FALSE(g.occupied(i, 0));
    EXPECT_FALSE(g.occupied(i, g.height - 1));
  }
  EXPECT_FALSE(g.occupied(0, g.height / 2));
}

TEST(DistanceTransform, HalfPlane) {
  Grid g = blank(20, 30);
  for (int j = 1; j < 30; ++j)
    for (int i = 0; i < 20; ++i) g.occupancy[g.index(i, j)] = 1;
  distance_transform(g);
  for (int j = 0; j < 30; ++j) EXPECT_EQ(g.distance[g.index(7, j)], j);
}

TEST(DistanceTransform, SingleEmptyCell) {
  Grid g = blank(15, 15);
  std::fill(g.occupancy.begin(), g.occupancy.end(), 1);
  g.occupancy[g.index(4, 9)] = 0;
  distance_transform(g);
  for (int j = 0; j < 15; ++j)
    for (int i = 0; i < 15; ++i) EXPECT_EQ(g.distance[g.index(i, j)], std::hypot(i - 4.0, j - 9.0));
}

TEST(DistanceTransform, ExactAgainstBruteForce) {
  testsupport::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int w = rng.integer(1, 64), h = rng.integer(1, 64);
    Grid g = blank(w, h);
    double p = rng.uniform(0.5, 0.99);
    for (auto& c : g.occupancy) c = rng.uniform(0, 1) < p;
    g.occupancy[g.index(rng.integer(0, w - 1), rng.integer(0, h - 1))] = 0;
    Grid d = distance_transform(std::as_const(g));
    for (int j = 0; j < h; ++j)
      for (int i = 0; i < w; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int b = 0; b < h; ++b)
          for (int a = 0; a < w; ++a)
            if (!g.occupied(a, b)) best = std::min(best, double((a - i) * (a - i) + (b - j) * (b - j)));
        ASSERT_EQ(d.distance[d.index(i, j)], std::sqrt(best)) << trial << " " << i << " " << j;
      }
  }
}

TEST(DistanceTransform, DiscCenterNearRadius) {
  double step = 1.0 / 256;
  Grid g = distance_transform(rasterize(make_disc({0, 0}, 1), step));
  double mx = *std::max_element(g.distance.begin(), g.distance.end());
  EXPECT_NEAR(mx, 1.0, step);
}

TEST(GridInnerArea, Examples) {
  double step = 1.0 / 512;
  Grid d = distance_transform(rasterize(make_disc({0, 0}, 1), step));
  EXPECT_NEAR(grid_inner_area(d, 0.5), kPi / 4, 8 * step);
  Grid s = distance_transform(rasterize(make_rect(0, 0, 1, 1), step));
  EXPECT_NEAR(grid_inner_area(s, 0.25), 0.25, 8 * step);
  Grid k = distance_transform(rasterize(build_kgon_domain(testsupport::kgon6()), 1.0 / 256));
  EXPECT_NEAR(grid_inner_area(k, 1.0), kPi, 40.0 / 256);
  double prev = grid_inner_area(d, 0.0);
  for (double r = 0.05; r < 1.0; r += 0.05) {
    double a = grid_inner_area(d, r);
    EXPECT_LE(a, prev);
    prev = a;
  }
  EXPECT_THROW(grid_inner_area(rasterize(make_disc({0, 0}, 1), step), 0.1), InvalidInput);
}

TEST(GridCheeger, DiscAndSquare) {
  Grid d = distance_transform(rasterize(make_disc({0, 0}, 1), 1.0 / 512));
  GridCheeger gc = grid_cheeger(d);
  EXPECT_NEAR(gc.h, 2.0, 1e-2);
  EXPECT_TRUE(grid_connected(d, gc.r));
  Grid s = distance_transform(rasterize(make_rect(0, 0, 1, 1), 1.0 / 1024));
  EXPECT_NEAR(grid_cheeger(s).h, 2 + std::sqrt(kPi), 1e-2);
}

TEST(GridComponents, DumbbellSplits) {
  Grid g = distance_transform(rasterize(make_dumbbell(1.0, 1.0, 0.2), 1.0 / 128));
  EXPECT_EQ(grid_components(g, 0.5), 2);
  EXPECT_EQ(grid_components(g, 0.05), 1);
  EXPECT_FALSE(grid_connected(g, 0.5));
  EXPECT_THROW(grid_connected(g, 5.0), EmptyRegion);
}

TEST(GridDump, Headers) {
  Grid g = distance_transform(rasterize(make_disc({0, 0}, 1), 1.0 / 32));
  std::ostringstream a, b;
  write_pbm(g, a);
  write_pgm(g, b);
  std::string s = a.str(), t = b.str();
  EXPECT_EQ(s.rfind("P4\n", 0), 0u);
  EXPECT_EQ(t.rfind("P5\n", 0), 0u);
  std::string head = "P4\n" + std::to_string(g.width) + " " + std::to_string(g.height) + "\n";
  EXPECT_EQ(s.size(), head.size() + static_cast<std::size_t>((g.width + 7) / 8) * g.height);
}
