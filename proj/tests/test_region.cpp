#include <gtest/gtest.h>

#include "common.hpp"

using namespace fuchsian;

namespace {
boundary_point at(double t) { return boundary_point::from_angle(t); }
}

TEST(DirectedArc, ClockwiseInputIsStoredCounterClockwise) {
  directed_arc a(at(2.0), at(1.0), arc_orientation::cw);
  EXPECT_EQ(a.start().theta(), 1.0);
  EXPECT_NEAR(a.sweep(), 1.0, 1e-15);
  directed_arc b(at(2.0), at(1.0));
  EXPECT_NEAR(b.sweep(), two_pi - 1.0, 1e-15);
}

TEST(DirectedArc, ContainmentAcrossTheSeam) {
  directed_arc a(at(6.0), at(0.5));
  EXPECT_TRUE(a.contains(0.1));
  EXPECT_TRUE(a.contains(6.1));
  EXPECT_FALSE(a.contains(3.0));
  EXPECT_TRUE(a.contains(0.5 + 1e-11, 1e-10));
  EXPECT_TRUE(directed_arc(at(1.0), at(1.0)).degenerate());
}

TEST(Rect, SeamRectangleSplitsIntoFourBoxes) {
  rect r{directed_arc(at(6.0), at(0.5)), directed_arc(at(6.2), at(0.1)), 1, 1, "r"};
  auto bs = to_boxes(r);
  EXPECT_EQ(bs.size(), 4u);
  double total = 0.0;
  for (const auto& b : bs) total += b.area();
  EXPECT_NEAR(total, r.measure(), 1e-12);
  EXPECT_NEAR(union_measure(bs), r.measure(), 1e-12);
}

TEST(Measure, UnionOverlapAndDifference) {
  std::vector<box> a{{0, 2, 0, 2}, {1, 3, 1, 3}};
  EXPECT_NEAR(union_measure(a), 7.0, 1e-12);
  EXPECT_NEAR(pairwise_overlap(a), 1.0, 1e-12);
  std::vector<box> b{{0, 2, 0, 2}};
  EXPECT_NEAR(symmetric_difference(a, b), 3.0, 1e-12);
  EXPECT_NEAR(difference_measure(b, a), 0.0, 1e-12);
  EXPECT_NEAR(difference_measure(a, b), 3.0, 1e-12);
  std::vector<box> tiling{{0, 1, 0, 1}, {1, 2, 0, 1}};
  EXPECT_NEAR(pairwise_overlap(tiling), 0.0, 0.0);
}

TEST(Measure, TripleOverlapCountsPairs) {
  std::vector<box> a{{0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}};
  EXPECT_NEAR(pairwise_overlap(a), 3.0, 1e-12);
}

TEST(Measure, ClipToWindow) {
  auto c = clip({{0, 2, 0, 2}, {3, 4, 0, 1}}, {1, 3, 0, 6});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(c[0].area(), 2.0, 1e-15);
}

TEST(Rect, MoebiusImageKeepsOrientation) {
  std::mt19937_64 g(5);
  auto m = testing_support::random_moebius(g);
  rect r{directed_arc(at(1.0), at(2.0)), directed_arc(at(3.0), at(4.0)), 1, 1, ""};
  auto img = r.image(m);
  EXPECT_NEAR(img.u.start().theta(), apply(m, at(1.0)).theta(), 1e-12);
  EXPECT_TRUE(img.u.contains(apply(m, at(1.5)).theta()));
  EXPECT_TRUE(img.w.contains(apply(m, at(3.5)).theta()));
}
