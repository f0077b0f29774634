#include <gtest/gtest.h>

#include "cheeger/cmcprofile.hpp"
#include "cheeger/errors.hpp"
#include "support/suite.hpp"

using namespace cheeger;
namespace oracle = testsupport::oracle;
using testsupport::kPi;

TEST(Profile, MatchesIndependentQuadratureOracle) {
  StaircaseParams a{1.0, 1.2, 1.0 / 3, 3}, b{0.8, 1.5, 0.5, 2};
  Profile pa(a), pb(b);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(pa.u(oracle::kUFractions[i] * a.ell), oracle::kUThird[i], 1e-14);
    EXPECT_NEAR(pb.u(oracle::kUFractions[i] * b.ell), oracle::kUHalf[i], 1e-14);
  }
}

TEST(Profile, EndpointsAndSymmetry) {
  StaircaseParams p{1.0, 1.4, 1.0 / 3, 5};
  Profile prof(p);
  EXPECT_NEAR(prof.u(0), 0.0, 1e-15);
  EXPECT_NEAR(prof.u(p.ell), 0.0, 1e-14);
  for (double d : {0.01, 0.1, 0.3, 0.6})
    EXPECT_NEAR(prof.u(p.ell / 2 - d), prof.u(p.ell / 2 + d), 1e-13);
}

TEST(Profile, FlatWhenNoStage) {
  StaircaseParams p{1.0, 1.0, 1.0 / 3, 0};
  Profile prof(p);
  for (double t : {0.0, 0.3, 0.77, 1.0}) EXPECT_NEAR(prof.u(t), 0.0, 1e-15);
  for (const auto& e : prof.arc_chain()) EXPECT_TRUE(e.is_segment());
}

TEST(Profile, ChainMatchesQuadrature) {
  StaircaseParams p{1.0, 0.5, 1.0 / 3, 4};
  Profile prof(p);
  QuadratureProfile q(p, 1e-13);
  EXPECT_EQ(prof.pieces().size(), 2u * 16 - 1);
  double worst = 0;
  for (int i = 0; i <= 1000; ++i) {
    double t = p.ell * i / 1000;
    worst = std::max(worst, std::abs(prof.u(t) - q(t)));
  }
  EXPECT_LE(worst, 1e-8);
  EXPECT_NEAR(u_quadrature(p, 0.3, 1e-13), prof.u(0.3), 1e-12);
}

TEST(Profile, GapArcsHaveCurvatureH) {
  StaircaseParams p{1.7, 0.9, 0.4, 3};
  Profile prof(p);
  int gaps = 0;
  for (const auto& pc : prof.pieces()) {
    if (pc.stage) {
      EXPECT_NEAR(pc.curvature, p.H - p.H * std::pow(1 - p.tau, -p.n), 1e-12);
    } else {
      ++gaps;
      EXPECT_EQ(pc.curvature, p.H);
    }
  }
  EXPECT_EQ(gaps, 7);
}

TEST(Profile, FluxIdentity) {
  StaircaseParams p{1.0, 1.5, 1.0 / 3, 6};
  Profile prof(p);
  Staircase s(p);
  double worst = 0;
  for (int i = 0; i <= 10000; ++i) {
    double t = p.ell * i / 10000;
    worst = std::max(worst, std::abs(prof.flux(t) - (s(t) - p.H * t)));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(TangentBall, Examples) {
  StaircaseParams p{1.0, 1.5, 1.0 / 3, 6};
  Profile prof(p);
  auto mid = tangent_ball(prof, p.ell / 2);
  EXPECT_TRUE(mid.contained);
  EXPECT_NEAR(mid.center.x, p.ell / 2, 1e-13);
  EXPECT_NEAR(mid.center.y, prof.u(p.ell / 2) - 1 / p.H, 1e-13);
  auto left = tangent_ball(prof, 1e-9);
  EXPECT_NEAR(left.center.x, 0.0, 1e-7);
  EXPECT_NEAR(left.center.y, -1 / p.H, 1e-7);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) bad += !tangent_ball(prof, p.ell * (i + 0.5) / 1000, 1024).contained;
  EXPECT_EQ(bad, 0);
}

TEST(TangentPotential, MinimumAtTangency) {
  StaircaseParams p{1.0, 1.2, 0.5, 4};
  Profile prof(p);
  for (double t : {0.1, 0.5, 0.9})
    for (double r : {0.0, 0.2, 0.6, 1.1})
      EXPECT_GE(tangent_potential(prof, t, r), tangent_potential(prof, t, t) - 1e-13);
}

TEST(ArcAngles, Examples) {
  StaircaseParams p{1.0, 1.5, 1.0 / 3, 4};  // H ell tau = 0.5
  AngleReport r = arc_angles(p);
  EXPECT_NEAR(r.central_angle, 2 * std::asin(0.25), 1e-14);
  EXPECT_NEAR(r.central_angle, 0.50536051028415730, 1e-12);
  EXPECT_LE(r.max_noncentral, kPi / 2);
  EXPECT_LE(r.max_crosscheck, 1e-12);
  EXPECT_EQ(r.angles.size(), 15u);
  StaircaseParams q{1.0, 1.99, 0.9, 2};
  EXPECT_LT(arc_angles(q).central_angle, kPi);
}

TEST(Holder, ModulusBoundedAtAlpha) {
  StaircaseParams p{1.0, 1.0, 1.0 / 3, 12};
  Profile prof(p);
  double a = alpha(p.tau);
  double at = holder_modulus(prof, a, 10, 2000, 3);
  double above = holder_modulus(prof, a + 0.3, 10, 2000, 3);
  EXPECT_TRUE(std::isfinite(at));
  EXPECT_GT(above, at);
}
