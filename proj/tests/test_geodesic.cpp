#include <gtest/gtest.h>

#include "common.hpp"

using namespace fuchsian;
using namespace testing_support;

TEST(Geodesic, BoundaryPairCarrierIsOrthogonalAndPassesThroughEndpoints) {
  std::mt19937_64 g(3);
  for (int i = 0; i < 200; ++i) {
    auto u = boundary_point::from_angle(random_angle(g)), w = boundary_point::from_angle(random_angle(g));
    if (angular_distance(u, w) < 1e-3 || std::abs(angular_distance(u, w) - pi) < 1e-3) continue;
    auto geo = geodesic_from_boundary_pair(u, w);
    ASSERT_FALSE(geo.is_diameter());
    EXPECT_LT(geo.residual(u.z()), 1e-10);
    EXPECT_LT(geo.residual(w.z()), 1e-10);
    const auto& c = geo.circle();
    EXPECT_NEAR(std::norm(c.center), 1.0 + c.radius * c.radius, 1e-9 * std::norm(c.center));
  }
}

TEST(Geodesic, AntipodalPairIsADiameter) {
  auto geo = geodesic_from_boundary_pair(boundary_point::from_angle(0.3), boundary_point::from_angle(0.3 + pi));
  EXPECT_TRUE(geo.is_diameter());
  EXPECT_LT(geo.residual(0.0), 1e-15);
}

TEST(Geodesic, CoincidentEndpointsAreRejected) {
  try {
    geodesic_from_boundary_pair(boundary_point::from_angle(1.0), boundary_point::from_angle(1.0));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::degenerate_geodesic);
  }
}

TEST(Geodesic, ThroughInteriorPointMatchesReferenceEndpoint) {
  auto geo = geodesic_through_interior(boundary_point(), disk_point{standard::elliptic_vertex(2, 3)});
  EXPECT_NEAR(geo.second.theta(), oracle::aux_l2_m3_Q_arg, 1e-10);
  EXPECT_LT(geo.residual(standard::elliptic_vertex(2, 3)), 1e-12);
  EXPECT_LT(geo.residual(geo.second.z()), 1e-12);
}

TEST(Geodesic, ThroughOriginIsADiameter) {
  auto geo = geodesic_through_interior(boundary_point::from_angle(0.4), disk_point{0.0});
  EXPECT_TRUE(geo.is_diameter());
  EXPECT_NEAR(geo.second.theta(), 0.4 + pi, 1e-15);
  EXPECT_THROW(geodesic_through_interior(boundary_point(), disk_point{complex(1.0, 0.0)}), error);
}

TEST(Geodesic, SamplesStayOnCarrier) {
  auto geo = geodesic_from_boundary_pair(boundary_point::from_angle(0.2), boundary_point::from_angle(2.0));
  for (auto z : geo.sample(geo.first.z(), geo.second.z(), 32)) {
    EXPECT_LT(geo.residual(z), 1e-12);
    EXPECT_LE(std::abs(z), 1.0 + 1e-12);
  }
}

TEST(IsometricCircle, ParabolicGeneratorForTwoBlocks) {
  auto c = isometric_circle(standard::parabolic_generator(2));
  EXPECT_NEAR(c.center.real(), oracle::iso_cinf_l2_center_re, 1e-12);
  EXPECT_NEAR(c.center.imag(), oracle::iso_cinf_l2_center_im, 1e-12);
  EXPECT_NEAR(c.radius, oracle::iso_cinf_l2_radius, 1e-12);
  // through 1 and i
  EXPECT_NEAR(std::abs(complex(1.0) - c.center), c.radius, 1e-12);
  EXPECT_NEAR(std::abs(complex(0.0, 1.0) - c.center), c.radius, 1e-12);
}

TEST(IsometricCircle, HyperbolicGeneratorForOneBlock) {
  auto c = isometric_circle(standard::hyperbolic_a(1));
  EXPECT_NEAR(c.center.real(), oracle::iso_a1_l1_center_re, 1e-12);
  EXPECT_NEAR(c.center.imag(), oracle::iso_a1_l1_center_im, 1e-12);
  EXPECT_NEAR(c.radius, oracle::iso_a1_l1_radius, 1e-12);
  EXPECT_NEAR(c.radius, std::tan(pi / 4), 1e-12);
  EXPECT_LT(std::abs(c.center - std::polar(1.0 / std::cos(pi / 4), pi / 4)), 1e-12);
}
