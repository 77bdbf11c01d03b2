#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "fuchsian/config.hpp"

namespace fuchsian {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Canonical angle in [0, 2pi). Values within `guard` below 2pi collapse to 0.
inline double wrap_angle(double theta, double guard = 1e-12) {
  double t = std::fmod(theta, two_pi);
  if (t < 0) t += two_pi;
  if (t >= two_pi - guard) t = 0.0;
  return t;
}

/// Counter-clockwise sweep from `from` to `to`, in [0, 2pi).
inline double ccw_sweep(double from, double to) {
  double d = std::fmod(to - from, two_pi);
  if (d < 0) d += two_pi;
  if (d >= two_pi) d -= two_pi;
  return d;
}

inline double angular_distance(double a, double b) {
  double d = ccw_sweep(a, b);
  return std::min(d, two_pi - d);
}

/// A point of the boundary circle, kept as angle and unit complex number.
class boundary_point {
 public:
  boundary_point() : theta_(0.0), z_(1.0, 0.0) {}

  static boundary_point from_angle(double theta) {
    if (!std::isfinite(theta)) throw error(errc::non_finite, "boundary angle is not finite");
    boundary_point p;
    p.theta_ = wrap_angle(theta);
    p.z_ = std::polar(1.0, p.theta_);
    return p;
  }

  /// Projects a nonzero complex number radially onto the circle.
  static boundary_point from_complex(complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw error(errc::non_finite, "boundary point is not finite");
    double r = std::abs(z);
    if (r == 0.0) throw error(errc::degenerate_geodesic, "cannot project 0 to the circle");
    boundary_point p;
    p.theta_ = wrap_angle(std::arg(z));
    // the wrap guard may have moved theta to 0; keep z consistent with it
    p.z_ = p.theta_ == 0.0 ? complex(1.0, 0.0) : z / r;
    return p;
  }

  double theta() const { return theta_; }
  complex z() const { return z_; }

  boundary_point rotated(double angle) const { return from_angle(theta_ + angle); }

  friend bool operator==(const boundary_point& a, const boundary_point& b) {
    return a.theta_ == b.theta_;
  }

 private:
  double theta_;
  complex z_;
};

inline double angular_distance(const boundary_point& a, const boundary_point& b) {
  return angular_distance(a.theta(), b.theta());
}

/// True when x lies in the open counter-clockwise arc (from, to), at least `slack` away from
/// both ends.
inline bool in_open_arc(double x, double from, double to, double slack = 0.0) {
  double span = ccw_sweep(from, to);
  if (span == 0.0) span = two_pi;
  double d = ccw_sweep(from, x);
  return d > slack && d < span - slack;
}

/// Closed counter-clockwise arc [from, to] widened by `slack` on both sides.
inline bool in_closed_arc(double x, double from, double to, double slack = 0.0) {
  double span = ccw_sweep(from, to);
  double d = ccw_sweep(from, x);
  return d <= span + slack || d >= two_pi - slack;
}

/// Midpoint of the counter-clockwise arc from `from` to `to`.
inline double ccw_midpoint(double from, double to) {
  return wrap_angle(from + 0.5 * ccw_sweep(from, to));
}

}  // namespace fuchsian
