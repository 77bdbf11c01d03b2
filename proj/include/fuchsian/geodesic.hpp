#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "fuchsian/circle.hpp"
#include "fuchsian/moebius.hpp"

namespace fuchsian {

/// Straight line through the origin.
struct diameter {};

struct disk_point {
  complex z;
};

/// A complete hyperbolic geodesic: its two ideal endpoints plus the Euclidean carrier.
struct geodesic {
  boundary_point first;
  boundary_point second;
  std::variant<diameter, euclidean_circle> model;

  bool is_diameter() const { return std::holds_alternative<diameter>(model); }
  const euclidean_circle& circle() const { return std::get<euclidean_circle>(model); }

  /// Euclidean distance from z to the carrier (line or circle).
  double residual(complex z) const {
    if (is_diameter()) return std::abs((z * std::conj(first.z())).imag());
    const auto& c = circle();
    return std::abs(std::abs(z - c.center) - c.radius);
  }

  /// n+1 points on the carrier running from z1 to z2, both assumed to lie on it.
  std::vector<complex> sample(complex z1, complex z2, int n) const {
    std::vector<complex> pts;
    pts.reserve(n + 1);
    if (is_diameter()) {
      for (int i = 0; i <= n; ++i) pts.push_back(z1 + (z2 - z1) * (double(i) / n));
      return pts;
    }
    const auto& c = circle();
    double a1 = std::arg(z1 - c.center), a2 = std::arg(z2 - c.center);
    double d = std::remainder(a2 - a1, two_pi);  // shorter way round the carrier
    for (int i = 0; i <= n; ++i) pts.push_back(c.center + std::polar(c.radius, a1 + d * i / n));
    return pts;
  }
};

inline geodesic geodesic_from_boundary_pair(const boundary_point& u, const boundary_point& w,
                                            double tol = 1e-12) {
  double sep = angular_distance(u, w);
  if (sep <= tol) throw error(errc::degenerate_geodesic, "geodesic endpoints coincide");
  if (std::abs(sep - pi) <= tol) return {u, w, diameter{}};
  double from = ccw_sweep(u.theta(), w.theta()) <= pi ? u.theta() : w.theta();
  double mid = from + 0.5 * sep;
  double half = 0.5 * sep;
  return {u, w, euclidean_circle{std::polar(1.0 / std::cos(half), mid), std::tan(half)}};
}

/// Complete geodesic through the ideal point u and the interior point p; `first` is u.
inline geodesic geodesic_through_interior(const boundary_point& u, const disk_point& p,
                                          double tol = 1e-12) {
  if (!(std::abs(p.z) < 1.0)) throw error(errc::degenerate_geodesic, "point is not interior");
  // In the frame where u = 1 the carrier is centred at 1 + i t (tangent line at u) and passes
  // through p' = x + i y: (1 - x)^2 + y^2 = 2 t y.
  complex q = p.z * std::conj(u.z());
  double x = q.real(), y = q.imag();
  if (std::abs(y) <= tol) return {u, u.rotated(pi), diameter{}};
  double t = ((1.0 - x) * (1.0 - x) + y * y) / (2.0 * y);
  complex center = u.z() * complex(1.0, t);
  return {u, u.rotated(2.0 * std::atan(t)), euclidean_circle{center, std::abs(t)}};
}

}  // namespace fuchsian
