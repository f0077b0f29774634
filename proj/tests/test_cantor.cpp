#include <gtest/gtest.h>

#include "cheeger/cantor.hpp"
#include "cheeger/errors.hpp"
#include "support/suite.hpp"

using namespace cheeger;
namespace oracle = testsupport::oracle;

TEST(CantorStage, Examples) {
  auto c1 = cantor_stage(1.0 / 3, 1);
  ASSERT_EQ(c1.intervals.size(), 2u);
  EXPECT_NEAR(c1.intervals[0].second, 1.0 / 3, 1e-16);
  EXPECT_NEAR(c1.intervals[1].first, 2.0 / 3, 1e-16);
  EXPECT_NEAR(c1.total_length(), 2.0 / 3, 1e-15);
  auto c2 = cantor_stage(1.0 / 3, 2);
  EXPECT_EQ(c2.intervals.size(), 4u);
  EXPECT_NEAR(c2.total_length(), 4.0 / 9, 1e-15);
  auto c0 = cantor_stage(0.25, 0);
  ASSERT_EQ(c0.intervals.size(), 1u);
  EXPECT_EQ(c0.intervals[0], Interval(0.0, 1.0));
}

TEST(CantorStage, RejectsBadParameters) {
  EXPECT_THROW(cantor_stage(0.0, 2), InvalidParameter);
  EXPECT_THROW(cantor_stage(1.0, 2), InvalidParameter);
  EXPECT_THROW(cantor_stage(0.3, -1), InvalidParameter);
  EXPECT_THROW(cantor_stage(0.3, kMaxCantorStage + 1), InvalidParameter);
}

TEST(Alpha, Examples) {
  EXPECT_NEAR(alpha(1.0 / 3), std::log(2.0) / std::log(3.0), 1e-15);
  EXPECT_NEAR(alpha(0.5), 0.5, 1e-15);
  EXPECT_NEAR(alpha(1e-9), 1.0, 1e-8);
}

TEST(Staircase, Examples) {
  StaircaseParams p{1.3, 1.1, 1.0 / 3, 5};
  EXPECT_EQ(staircase_eval(p, 0.0), 0.0);
  EXPECT_NEAR(staircase_eval(p, p.ell), p.H * p.ell, 1e-15);
  EXPECT_NEAR(staircase_eval(p, p.ell / 2), p.H * p.ell / 2, 1e-15);
  for (double f : {0.34, 0.4, 0.5, 0.6, 0.66})
    EXPECT_NEAR(staircase_eval(p, f * p.ell), p.H * p.ell / 2, 1e-15);
  for (double f : {0.01, 0.1, 0.3, 0.45}) EXPECT_GT(staircase_eval(p, f * p.ell), p.H * f * p.ell);
}

TEST(Staircase, OutsideDomainRejected) {
  StaircaseParams p{1.0, 1.0, 1.0 / 3, 2};
  EXPECT_THROW(staircase_eval(p, -0.1), InvalidParameter);
  EXPECT_THROW(staircase_eval(p, 1.1), InvalidParameter);
  StaircaseParams wide{1.0, 2.5, 1.0 / 3, 2};
  EXPECT_THROW(validate(wide), InvalidParameter);
  wide.allow_wide = true;
  EXPECT_NO_THROW(validate(wide));
}

TEST(BoxCount, Examples) {
  EXPECT_EQ(box_count(std::vector<double>{0.3}, 5), 1);
  EXPECT_EQ(box_count(std::vector<double>{0.25}, 2), 1);  // lies on a cell edge: half-open cells
  EXPECT_EQ(box_count(std::vector<Interval>{{0.0, 1.0 - 1e-12}}, 6), 64);
  auto st = cantor_stage(1.0 / 3, 10);
  for (int j = 4; j <= 10; ++j) EXPECT_EQ(box_count(st.intervals, j), oracle::kC10Counts[j - 4]) << j;
  // stage intervals at their own scale: about 2^n cells
  auto s6 = cantor_stage(1.0 / 3, 6);
  long long c = box_count(s6.intervals, static_cast<int>(std::lround(6 * std::log2(3.0))));
  EXPECT_GE(c, 64);
  EXPECT_LE(c, 3 * 64);
}

TEST(Dimension, Examples) {
  std::vector<double> pts{0.1, 0.47, 0.9};
  EXPECT_NEAR(estimate_dimension(pts, 6, 14).slope, 0.0, 0.05);
  auto seg = estimate_dimension(std::vector<Interval>{{0.0, 1.0}}, 2, 12);
  EXPECT_NEAR(seg.slope, 1.0, 0.05);
  EXPECT_GT(seg.r2, 0.999);
  // endpoints of C_12(1/3)
  std::vector<double> ends;
  for (auto [a, b] : cantor_stage(1.0 / 3, 12).intervals) {
    ends.push_back(a);
    ends.push_back(b);
  }
  auto r = estimate_dimension(ends, 4, 12);
  EXPECT_NEAR(r.slope, alpha(1.0 / 3), 0.05);
  EXPECT_EQ(r.scales.size(), 9u);
  EXPECT_EQ(r.counts.size(), 9u);
}

TEST(Dimension, NeedsThreeScales) {
  std::vector<double> pts{0.5};
  EXPECT_THROW(estimate_dimension(pts, 3, 4), InsufficientScales);
  EXPECT_THROW(estimate_dimension(pts, 5, 3), InsufficientScales);
  EXPECT_NO_THROW(estimate_dimension(pts, 3, 5));
}

TEST(Dimension, Points2d) {
  std::vector<Point> diag;
  for (int i = 0; i < 4096; ++i) diag.push_back({i / 4096.0, i / 4096.0});
  EXPECT_NEAR(estimate_dimension(diag, 2, 10).slope, 1.0, 0.05);
}
