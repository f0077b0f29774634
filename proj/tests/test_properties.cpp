// Randomized invariants; each case draws from a fixed seed so failures reproduce.
#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "cheeger/cantor.hpp"
#include "cheeger/cmcprofile.hpp"
#include "cheeger/constructions.hpp"
#include "cheeger/solver.hpp"
#include "support/suite.hpp"

using namespace cheeger;
using testsupport::kPi;
using testsupport::Rng;

namespace {

StaircaseParams random_params(Rng& rng, int max_n = 8) {
  StaircaseParams p;
  p.tau = rng.uniform(0.05, 0.9);
  p.n = rng.integer(0, max_n);
  p.H = rng.uniform(0.2, 5.0);
  p.ell = rng.uniform(0.05, 1.98) / p.H;
  return p;
}

}  // namespace

TEST(Property, SteinerOnRandomConvex) {
  Rng rng(101);
  for (int i = 0; i < 60; ++i) {
    ArcGon g = testsupport::random_convex(rng);
    double r = rng.uniform(0.01, 2.0);
    ArcGon d = minkowski_disc(g, r);
    double A = area(g), P = perimeter(g);
    EXPECT_NEAR(area(d), A + P * r + kPi * r * r, 1e-9 * (A + P * r + kPi * r * r)) << i;
    EXPECT_NEAR(perimeter(d), P + 2 * kPi * r, 1e-9 * (P + 2 * kPi * r)) << i;
  }
}

TEST(Property, ErosionDilationRoundTrip) {
  Rng rng(102);
  for (int i = 0; i < 40; ++i) {
    ArcGon g = testsupport::random_convex(rng);
    double r = rng.uniform(0.05, 1.0);
    ArcGon E = minkowski_disc(g, r);
    ArcGon back = minkowski_disc(inner_parallel(E, r), r);
    EXPECT_LT(boundary_hausdorff(back, E, 2048), 1e-8) << i;
  }
  ArcGon E = build_kgon_domain(testsupport::kgon6());
  EXPECT_LT(boundary_hausdorff(minkowski_disc(inner_parallel(E, 1.0), 1.0), E), 1e-8);
  ArcGon C = build_cantor_domain(testsupport::cantor_spec(5));
  EXPECT_LT(boundary_hausdorff(minkowski_disc(inner_parallel(C, 1.0), 1.0), C), 1e-8);
}

TEST(Property, ScalingOfAreaAndPerimeter) {
  Rng rng(103);
  for (int i = 0; i < 50; ++i) {
    ArcGon g = testsupport::random_convex(rng);
    double lam = rng.uniform(0.1, 20.0);
    ArcGon s = scaled(g, lam);
    EXPECT_NEAR(area(s), lam * lam * area(g), 1e-12 * lam * lam * area(g));
    EXPECT_NEAR(perimeter(s), lam * perimeter(g), 1e-12 * lam * perimeter(g));
  }
}

TEST(Property, InnerParallelIsMonotone) {
  Rng rng(104);
  std::vector<ArcGon> shapes{make_dumbbell(1.0, 1.0, 0.3), build_kgon_domain({7, 1.0, 1.6}),
                             build_cantor_domain(testsupport::cantor_spec(3))};
  for (int i = 0; i < 6; ++i) shapes.push_back(testsupport::random_convex(rng));
  for (const auto& g : shapes) {
    Box b = bbox(g);
    double rmax = 0.5 * std::min(b.x1 - b.x0, b.y1 - b.y0);
    double r1 = rng.uniform(0.01, 0.5) * rmax, r2 = r1 + rng.uniform(0.01, 0.4) * rmax;
    RegionSet a = inner_parallel(g, r1), c = inner_parallel(g, r2);
    for (int k = 0; k < 2000; ++k) {
      Point p{rng.uniform(b.x0, b.x1), rng.uniform(b.y0, b.y1)};
      if (testsupport::region_contains(c, p)) ASSERT_TRUE(testsupport::region_contains(a, p));
    }
    EXPECT_LE(area(c), area(a));
  }
}

TEST(Property, StaircaseIdentitiesAtRandomParameters) {
  Rng rng(105);
  for (int c = 0; c < 25; ++c) {
    StaircaseParams p = random_params(rng);
    Staircase s(p);
    double Hl = p.H * p.ell;
    EXPECT_EQ(s(0.0), 0.0);
    EXPECT_NEAR(s(p.ell), Hl, 1e-12);
    EXPECT_NEAR(s(p.ell / 2), Hl / 2, 1e-12);
    for (int i = 0; i < 2000; ++i) {
      double t = rng.uniform(0.0, p.ell);
      double g = s(t) - p.H * t;
      EXPECT_NEAR(s(t), Hl - s(p.ell - t), 1e-12);
      EXPECT_LT(std::abs(g), Hl / 2);
      if (p.n > 0 && t > 1e-9 * p.ell && t < p.ell / 2 * (1 - 1e-9)) EXPECT_GT(g, 0.0);
      if (p.n > 0 && t > p.ell / 2 * (1 + 1e-9) && t < p.ell * (1 - 1e-9)) EXPECT_LT(g, 0.0);
    }
  }
}

TEST(Property, StageRefinementNests) {
  Rng rng(106);
  for (int c = 0; c < 20; ++c) {
    double tau = rng.uniform(0.05, 0.95);
    int n = rng.integer(0, 10);
    auto a = cantor_stage(tau, n), b = cantor_stage(tau, n + 1);
    ASSERT_EQ(b.intervals.size(), 2 * a.intervals.size());
    for (std::size_t i = 0; i < b.intervals.size(); ++i) {
      const auto& parent = a.intervals[i / 2];
      EXPECT_GE(b.intervals[i].first, parent.first);
      EXPECT_LE(b.intervals[i].second, parent.second);
    }
  }
}

TEST(Property, StaircaseConvergesUniformly) {
  Rng rng(107);
  for (int c = 0; c < 10; ++c) {
    StaircaseParams p = random_params(rng, 0);
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 10; ++n) {
      StaircaseParams q = p, r = p;
      q.n = n;
      r.n = n + 1;
      Staircase sq(q), sr(r);
      double gap = 0;
      for (int i = 0; i <= 4000; ++i) {
        double t = p.ell * i / 4000;
        gap = std::max(gap, std::abs(sq(t) - sr(t)));
      }
      EXPECT_LE(gap, p.H * p.ell * std::pow(0.5, n) + 1e-12);
      EXPECT_LE(gap, prev + 1e-15);
      prev = gap;
    }
  }
}

TEST(Property, AlphaIsFixedPoint) {
  Rng rng(108);
  for (int i = 0; i < 10; ++i) {
    double tau = rng.uniform(0.01, 0.99);
    EXPECT_NEAR(2 * std::pow((1 - tau) / 2, alpha(tau)), 1.0, 1e-14);
  }
}

TEST(Property, FluxIdentityAndQuadrature) {
  Rng rng(109);
  for (int c = 0; c < 10; ++c) {
    StaircaseParams p = random_params(rng, 6);
    Profile prof(p);
    Staircase s(p);
    QuadratureProfile q(p, 1e-13);
    for (int i = 0; i <= 1000; ++i) {
      double t = p.ell * i / 1000;
      ASSERT_NEAR(prof.flux(t), s(t) - p.H * t, 1e-10);
      ASSERT_NEAR(prof.u(t), q(t), 1e-8);
    }
  }
}

TEST(Property, TangentPotentialGlobalMinimum) {
  Rng rng(110);
  StaircaseParams p{1.0, 1.4, 1.0 / 3, 5};
  Profile prof(p);
  for (int i = 0; i < 100; ++i) {
    double t = rng.uniform(0.0, p.ell), r = rng.uniform(0.0, p.ell);
    double at = tangent_potential(prof, t, t);
    EXPECT_GE(tangent_potential(prof, t, r), at - 1e-12);
  }
}

TEST(Property, FiniteDifferenceCurvatureOnGaps) {
  StaircaseParams p{1.3, 1.2, 0.4, 2};
  QuadratureProfile q(p, 1e-14);
  Profile prof(p);
  for (const auto& pc : prof.pieces()) {
    if (pc.stage) continue;
    double t = 0.5 * (pc.t0 + pc.t1), h = 1e-3 * (pc.t1 - pc.t0);
    double d1 = (q(t + h) - q(t - h)) / (2 * h), d2 = (q(t + h) - 2 * q(t) + q(t - h)) / (h * h);
    double kappa = -d2 / std::pow(1 + d1 * d1, 1.5);
    EXPECT_NEAR(kappa, p.H, 1e-4);
  }
}

TEST(Property, ContactAtLeastTwoForBuiltPairs) {
  Rng rng(111);
  for (int i = 0; i < 6; ++i) {
    int k = rng.integer(6, 10);
    double H = rng.uniform(0.5, 3.0);
    ArcGon E = build_kgon_domain({k, H, solve_rho0(k, H)});
    double d = rng.uniform(0.05, 0.95) * delta_max(E);
    auto pd = build_perturbed_domain(E, {d, 8});
    EXPECT_GE(contact_set(E, pd.omega).size(), 2u);
  }
  for (int i = 0; i < 3; ++i) {
    auto cs = testsupport::cantor_spec(rng.integer(1, 5), rng.uniform(0.2, 0.6), rng.uniform(0.5, 2.0));
    auto pd = build_perturbed_domain(cs, {rng.uniform(0.05, 0.95) * delta_max(cs), 8});
    EXPECT_GE(contact_set(build_cantor_domain(cs), pd.omega).size(), 2u);
  }
}

TEST(Property, SolverResidualWithinIterationBudget) {
  Rng rng(112);
  for (int i = 0; i < 8; ++i) {
    ArcGon g = testsupport::random_convex(rng);
    auto s = cheeger_constant(g);
    EXPECT_LE(s.residual, 1e-10 * std::max(1.0, area(g)));
    EXPECT_LE(s.iterations, 200);
    EXPECT_NEAR(cheeger_ratio(s.cheeger_set), s.h, 1e-6 * s.h);
  }
}

TEST(Property, JsonDoubleRoundTrip) {
  Rng rng(113);
  for (int i = 0; i < 200; ++i) {
    double x = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.integer(-12, 12));
    nlohmann::json j = x;
    EXPECT_EQ(nlohmann::json::parse(j.dump()).get<double>(), x);
  }
}
