#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fuchsian/polygon.hpp"

namespace fuchsian {

struct check_result {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct validation_report {
  std::vector<check_result> checks;
  double area = 0.0;           // from measured interior angles
  double expected_area = 0.0;  // from the signature
  double parabolic_trace = 0.0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const check_result* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline check_result make_check(std::string name, double residual, double tol, std::string info = {}) {
  return {std::move(name), residual <= tol, residual, tol, std::move(info)};
}

/// Interior angle at an elliptic vertex: after moving V_k to the origin both sides are radii.
inline double interior_angle(const marked_polygon& poly, int k) {
  complex V = poly.V(k).z;
  moebius T(complex(1.0), -V);
  double to_prev = std::arg(T(poly.V(k - 1).z)), to_next = std::arg(T(poly.V(k + 1).z));
  return ccw_sweep(to_next, to_prev);
}

/// Boundary arc cut off by side k on the outside of the polygon, as (start, sweep).
inline std::pair<double, double> cap_arc(const marked_polygon& poly, int k) {
  const geodesic& g = poly.side(k);
  const vertex &p = poly.V(k - 1), &q = poly.V(k);
  double from, to;
  if (p.ideal && q.ideal) {
    from = p.projection.theta();
    to = q.projection.theta();
  } else if (p.ideal) {
    from = p.projection.theta();
    to = g.second.theta();
  } else {
    from = g.second.theta();
    to = q.projection.theta();
  }
  return {from, ccw_sweep(from, to)};
}

inline double arc_overlap(std::pair<double, double> x, std::pair<double, double> y) {
  // intersect [x0, x0+xs] with [y0, y0+ys] on the circle
  double total = 0.0;
  double d = ccw_sweep(x.first, y.first);
  for (double shift : {d, d - two_pi}) {
    double lo = std::max(0.0, shift), hi = std::min(x.second, shift + y.second);
    if (hi > lo) total += hi - lo;
  }
  return total;
}

}  // namespace detail

/// Word whose value is the parabolic element fixing V_0: the block contributions
/// (commutators for hyperbolic blocks, single generators otherwise) composed in block order.
inline moebius boundary_product(const marked_polygon& poly) {
  moebius P;
  for (const auto& b : poly.blocks) {
    int s = b.start;
    moebius W = b.sym.kind == symbol_kind::square
                    ? poly.gamma(s + 2) * poly.gamma(s + 3) * poly.gamma(s + 4) * poly.gamma(s + 1)
                    : poly.gamma(s + 1);
    P = W * P;
  }
  return P;
}

inline validation_report validate_polygon(const marked_polygon& poly, const tolerances& tol = {}) {
  validation_report rep;
  const int N = poly.N;
  const int samples = 64;

  // (a) every side lies on the isometric circle of its generator
  double containment = 0.0, pairing = 0.0;
  for (int k = 1; k <= N; ++k) {
    const moebius& g = poly.gamma(k);
    const geodesic& side = poly.side(k);
    for (complex z : side.sample(poly.V(k - 1).z, poly.V(k).z, samples))
      containment = std::max(containment,
                             std::abs(std::abs(std::conj(g.b()) * z + std::conj(g.a())) - 1.0));
    // endpoints go to the partner's endpoints
    int p = poly.pair(k);
    complex e0 = g(poly.V(k - 1).z), e1 = g(poly.V(k).z);
    complex f0 = poly.V(p - 1).z, f1 = poly.V(p).z;
    pairing = std::max(pairing, std::min(std::max(std::abs(e0 - f0), std::abs(e1 - f1)),
                                         std::max(std::abs(e0 - f1), std::abs(e1 - f0))));
  }
  rep.checks.push_back(detail::make_check("side_containment", containment, tol.geometry));
  rep.checks.push_back(detail::make_check("side_pairing", pairing, tol.geometry));

  // (b) elliptic angles, plus (e) the area they imply
  double angle_res = 0.0, angle_sum = 0.0;
  for (int k : poly.elliptic_indices()) {
    double a = detail::interior_angle(poly, k);
    angle_sum += a;
    angle_res = std::max(angle_res, std::abs(a - two_pi / poly.V(k).order));
  }
  rep.checks.push_back(detail::make_check("elliptic_angles", angle_res, tol.geometry));

  // (c) caps of different cyclic factors do not overlap
  std::vector<std::vector<int>> factors;
  for (const auto& b : poly.blocks) {
    int s = b.start;
    if (b.sym.kind == symbol_kind::square) {
      factors.push_back({s + 1, s + 3});
      factors.push_back({s + 2, s + 4});
    } else {
      factors.push_back({s + 1, s + 2});
    }
  }
  double overlap = 0.0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      for (int x : factors[i])
        for (int y : factors[j])
          overlap = std::max(overlap, detail::arc_overlap(detail::cap_arc(poly, x),
                                                          detail::cap_arc(poly, y)));
  rep.checks.push_back(detail::make_check("free_combination", overlap, tol.geometry));

  // (d) the boundary word is parabolic and fixes V_0
  moebius P = boundary_product(poly);
  rep.parabolic_trace = P.trace();
  double fix = std::abs(P(poly.V(0).z) - poly.V(0).z);
  double trace_res = std::abs(std::abs(P.trace()) - 2.0);
  bool nontrivial = std::abs(P.b()) > tol.spectral;
  rep.checks.push_back(detail::make_check("parabolic_product", trace_res, tol.spectral,
                                          nontrivial ? "" : "product is the identity"));
  if (!nontrivial) rep.checks.back().passed = false;
  rep.checks.push_back(detail::make_check("product_fixes_v0", fix, tol.geometry));

  // (e) Gauss-Bonnet
  rep.area = (N - 2) * pi - angle_sum;
  rep.expected_area = poly.sig.area();
  rep.checks.push_back(
      detail::make_check("area", std::abs(rep.area - rep.expected_area), tol.geometry));

  // (f) ideal corners V_{4k} and V_{4g+2j} at multiples of 2pi/ell
  double dist = 0.0;
  const int g = poly.sig.genus, ell = poly.ell;
  for (int k = 0; k <= g; ++k)
    dist = std::max(dist, angular_distance(poly.V(4 * k).projection.theta(), two_pi * k / ell));
  for (int j = 0; g + j <= ell; ++j)
    dist = std::max(dist, angular_distance(poly.V(4 * g + 2 * j).projection.theta(),
                                           two_pi * (g + j) / ell));
  rep.checks.push_back(detail::make_check("equal_distribution", dist, tol.geometry));

  // equal Euclidean radii inside each hyperbolic block
  double radii = 0.0;
  for (const auto& b : poly.blocks) {
    if (b.sym.kind != symbol_kind::square) continue;
    double r0 = poly.side(b.start + 1).circle().radius;
    for (int i = 2; i <= 4; ++i)
      radii = std::max(radii, std::abs(poly.side(b.start + i).circle().radius - r0));
  }
  rep.checks.push_back(detail::make_check("equal_radii", radii, tol.geometry));

  // vertices in strictly increasing argument from V_0 = 1
  bool ordered = poly.V(0).projection.theta() == 0.0;
  for (int k = 1; k < N; ++k)
    ordered = ordered && poly.V(k).projection.theta() > poly.V(k - 1).projection.theta();
  rep.checks.push_back({"vertex_order", ordered, ordered ? 0.0 : 1.0, 0.0, ""});
  return rep;
}

}  // namespace fuchsian
