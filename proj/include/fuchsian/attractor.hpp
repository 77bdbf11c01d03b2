#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fuchsian/boundary.hpp"
#include "fuchsian/region.hpp"

namespace fuchsian {

struct strip_info {
  symbol sym;
  int block = 0;
  int count = 0;
  int I = 0, J = 0;       // cycle data, elliptic blocks of order >= 3
  bool degenerate = false;
};

struct attractor_domain {
  std::vector<rect> rects;
  std::vector<strip_info> strips;
  bool in_guarantee_range = true;
  double measure = 0.0;  // sum of rectangle measures
};

struct extension_step {
  int k = 0;
  boundary_point u, w;
};

/// F_A(u, w) = (gamma_k u, gamma_k w) with k chosen by w.
inline extension_step F_apply(const marked_polygon& poly, const partition& part,
                              const boundary_point& u, const boundary_point& w,
                              const tolerances& tol = {}) {
  if (angular_distance(u, w) <= tol.degenerate)
    throw error(errc::diagonal_point, "u and w coincide");
  int k = part.cell(w.theta());
  const moebius& g = poly.gamma(k);
  return {k, apply(g, u), apply(g, w)};
}

namespace detail {

inline boundary_point at(double angle) { return boundary_point::from_angle(angle); }

/// Rectangles of one strip in standard position; `gamma` holds the side offset within the block.
inline std::vector<rect> standard_strip(const block& b, int ell, const boundary_point& a, int I,
                                        int J, double snap_tol) {
  const double t = pi / ell;  // arg v
  auto arc = [](const boundary_point& x, const boundary_point& y) { return directed_arc(x, y); };
  std::vector<rect> out;
  switch (b.sym.kind) {
    case symbol_kind::square:
      // corners at v^{1/2}, v, v^{3/2}, v^2
      for (int i = 0; i < 4; ++i)
        out.push_back({arc(at(t * (i + 1) / 2.0), at(t * i / 2.0)),
                       arc(at(t * i / 2.0), at(t * (i + 1) / 2.0)), 0, i + 1,
                       "square(" + std::to_string(i + 1) + ")"});
      break;
    case symbol_kind::infinity:
      out.push_back({arc(at(t), at(0.0)), arc(at(0.0), at(t)), 0, 1, "parabolic(1)"});
      out.push_back({arc(at(2 * t), at(t)), arc(at(t), at(2 * t)), 0, 2, "parabolic(2)"});
      break;
    case symbol_kind::finite: {
      const boundary_point one = at(0.0), v2 = at(2 * t);
      if (b.sym.order == 2) {
        out.push_back({arc(v2, one), arc(one, v2), 0, 1, "order2"});
        break;
      }
      const moebius& c = b.standard_generators[0];
      auto fix = [&](boundary_point x) {
        for (const auto& y : {one, v2})
          if (angular_distance(x, y) <= snap_tol) return y;
        return x;
      };
      auto cp = [&](int n, const boundary_point& x) { return fix(apply(power(c, n), x)); };
      for (int i = 1; i <= I; ++i)
        out.push_back({arc(v2, cp(-i + 1, one)), arc(cp(-i + 1, a), cp(-i, a)), 0, 2,
                       "U(" + std::to_string(i) + ")"});
      out.push_back({arc(v2, cp(-I, one)), arc(cp(-I, a), v2), 0, 2, "U(" + std::to_string(I + 1) + ")"});
      for (int j = 1; j <= J; ++j)
        out.push_back({arc(cp(j - 1, v2), one), arc(cp(j, a), cp(j - 1, a)), 0, 1,
                       "L(" + std::to_string(j) + ")"});
      out.push_back({arc(cp(J, v2), one), arc(one, cp(J, a)), 0, 1, "L(" + std::to_string(J + 1) + ")"});
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Omega_A: the standard strip of each block's symbol, translated diagonally into place.
inline attractor_domain build_attractor(const marked_polygon& poly, const partition& part,
                                        bool allow_outside_guarantee = true,
                                        const tolerances& tol = {}) {
  attractor_domain dom;
  dom.in_guarantee_range = part.in_guarantee_range;
  if (!part.in_guarantee_range && !allow_outside_guarantee)
    throw error(errc::partition_out_of_guarantee_range,
                "some elliptic A_k lies outside [P_k, Q_k]");
  for (const auto& b : poly.blocks) {
    strip_info info;
    info.sym = b.sym;
    info.block = b.index;
    boundary_point a;
    if (b.sym.kind == symbol_kind::finite && b.sym.order >= 3) {
      auto cd = cycle(poly, part, b.start + 1, tol);
      info.I = cd.I;
      info.J = cd.J;
      info.degenerate = cd.degenerate;
      a = part.at(b.start + 1).rotated(-b.rotation);
    }
    for (auto r : detail::standard_strip(b, poly.ell, a, info.I, info.J, tol.snap)) {
      if (r.u.degenerate(tol.degenerate) || r.w.degenerate(tol.degenerate)) continue;
      rect placed = r.rotated(b.rotation);
      placed.block = b.index;
      placed.gamma = b.start + r.gamma;
      dom.rects.push_back(std::move(placed));
      ++info.count;
    }
    dom.strips.push_back(info);
  }
  for (const auto& r : dom.rects) dom.measure += r.measure();
  return dom;
}

/// Image of a family of rectangles under F_A. Each w-arc is first cut at the partition points
/// inside it so that every piece is moved by a single generator.
inline std::vector<rect> image_of(const marked_polygon& poly, const partition& part,
                                  const std::vector<rect>& rs, const tolerances& tol = {}) {
  std::vector<rect> out;
  for (const auto& r : rs) {
    std::vector<double> cuts;  // offsets from the w start
    for (int k = 0; k < poly.N; ++k) {
      double d = ccw_sweep(r.w.start().theta(), part.at(k).theta());
      if (d > tol.coordinate_merge && d < r.w.sweep() - tol.coordinate_merge) cuts.push_back(d);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<boundary_point> nodes{r.w.start()};
    for (double d : cuts) nodes.push_back(r.w.start().rotated(d));
    nodes.push_back(r.w.end());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      directed_arc piece(nodes[i], nodes[i + 1]);
      int k = part.cell(wrap_angle(piece.start().theta() + 0.5 * piece.sweep()));
      const moebius& g = poly.gamma(k);
      out.push_back({r.u.image(g), piece.image(g), r.block, k, r.label});
    }
  }
  return out;
}

struct bijectivity_report {
  double domain_overlap = 0.0;      // pairwise overlap of the rectangles of Omega
  double image_overlap = 0.0;       // pairwise overlap of the image rectangles
  double symmetric_difference = 0.0;
  double block_residual = 0.0;      // worst per-block vertical-strip mismatch
  double domain_measure = 0.0;
  double image_measure = 0.0;
  int single_cell_violations = 0;   // w-arcs crossing a partition point with distinct generators
  std::vector<rect> images;

  bool passed(double sym_tol = 1e-9, double overlap_tol = 1e-12) const {
    return image_overlap < overlap_tol && domain_overlap < overlap_tol &&
           symmetric_difference < sym_tol && block_residual < sym_tol &&
           single_cell_violations == 0;
  }
};

inline bijectivity_report verify_bijectivity(const marked_polygon& poly, const partition& part,
                                             const attractor_domain& dom,
                                             const tolerances& tol = {}) {
  bijectivity_report rep;
  const double merge = tol.coordinate_merge;
  auto dom_boxes = to_boxes(dom.rects);
  rep.images = image_of(poly, part, dom.rects, tol);
  auto img_boxes = to_boxes(rep.images);
  rep.domain_overlap = pairwise_overlap(dom_boxes, merge);
  rep.image_overlap = pairwise_overlap(img_boxes, merge);
  rep.symmetric_difference = symmetric_difference(img_boxes, dom_boxes, merge);
  for (const auto& r : dom.rects) rep.domain_measure += r.measure();
  for (const auto& r : rep.images) rep.image_measure += r.measure();

  for (const auto& r : dom.rects) {
    for (const auto& img : image_of(poly, part, {r}, tol))
      if (!equal_up_to_sign(poly.gamma(img.gamma), poly.gamma(r.gamma), tol.structural))
        ++rep.single_cell_violations;
  }

  const double width = two_pi / poly.ell;
  for (const auto& b : poly.blocks) {
    std::vector<rect> mine;
    for (const auto& r : rep.images)
      if (r.block == b.index) mine.push_back(r);
    box window{width * (b.index - 1), width * b.index, 0.0, two_pi};
    double res = symmetric_difference(to_boxes(mine), clip(dom_boxes, window), merge);
    rep.block_residual = std::max(rep.block_residual, res);
  }
  return rep;
}

/// Rectangles escaping which the isometric-circle argument needs.
inline std::vector<rect> phi_set(const marked_polygon& poly, const partition& part) {
  std::vector<rect> out;
  auto arc = [](const boundary_point& x, const boundary_point& y) { return directed_arc(x, y); };
  for (int k = 1; k <= poly.N; ++k) {
    const vertex &prev = poly.V(k - 1), &cur = poly.V(k);
    int b = poly.block_of_vertex(k - 1).index;
    if (prev.ideal && cur.ideal) {
      auto side = arc(prev.projection, cur.projection);
      out.push_back({side, side, b, k, "Phi(" + std::to_string(k) + ")"});
    } else if (!cur.ideal) {
      const auto& aux = poly.aux_at(k);
      out.push_back({arc(prev.projection, aux.Q), arc(part.at(k - 1), part.at(k)), b, k,
                     "Phi(" + std::to_string(k) + ")"});
      out.push_back({arc(aux.P, poly.V(k + 1).projection), arc(part.at(k), part.at(k + 1)), b,
                     k + 1, "Phi(" + std::to_string(k + 1) + ")"});
    }
  }
  return out;
}

/// The hatted rectangles next to an elliptic vertex of order >= 3; empty ones are dropped.
inline std::vector<rect> exceptional_set(const marked_polygon& poly, const partition& part, int k,
                                         bool strict = false, const tolerances& tol = {}) {
  const vertex& vk = poly.V(k);
  if (vk.ideal) throw error(errc::not_elliptic, "vertex " + std::to_string(k) + " is ideal");
  if (vk.order == 2) {
    if (strict) throw error(errc::order_two, "order-2 vertices have no exceptional set");
    return {};
  }
  const block& b = poly.block_of_vertex(k);
  auto cd = cycle(poly, part, k, tol);
  const double t = pi / poly.ell;
  const boundary_point one, v2 = boundary_point::from_angle(2 * t);
  const auto& aux = poly.aux_at(k);
  boundary_point p = aux.P.rotated(-b.rotation), q = aux.Q.rotated(-b.rotation);
  boundary_point a = part.at(k).rotated(-b.rotation);
  const moebius& c = b.standard_generators[0];
  auto cp = [&](int n, const boundary_point& x) {
    boundary_point y = apply(power(c, n), x);
    for (const auto& z : {one, v2})
      if (angular_distance(y, z) <= tol.snap) return z;
    return y;
  };
  auto arc = [](const boundary_point& x, const boundary_point& y) { return directed_arc(x, y); };
  std::vector<rect> out;
  auto keep = [&](rect r, bool nonempty) {
    if (!nonempty || r.u.degenerate(tol.degenerate) || r.w.degenerate(tol.degenerate)) return;
    rect placed = r.rotated(b.rotation);
    placed.block = b.index;
    placed.gamma = b.start + r.gamma;
    out.push_back(std::move(placed));
  };
  // the u-arc [q, c^{j-1}(v^2)] is empty unless its end lies in (q, v^2]
  auto lower_ok = [&](const boundary_point& e) {
    double span = ccw_sweep(q.theta(), v2.theta());
    double d = ccw_sweep(q.theta(), e.theta());
    return d > tol.degenerate && d <= span + tol.membership;
  };
  // the u-arc [c^{-i+1}(1), p] is empty unless its start lies in [1, p)
  auto upper_ok = [&](const boundary_point& s) {
    double span = ccw_sweep(one.theta(), p.theta());
    double d = ccw_sweep(one.theta(), s.theta());
    return (d < span - tol.degenerate) || d >= two_pi - tol.membership;
  };
  for (int j = 1; j <= cd.J; ++j) {
    auto e = cp(j - 1, v2);
    keep({arc(q, e), arc(cp(j, a), cp(j - 1, a)), 0, 1, "Lhat(" + std::to_string(j) + ")"}, lower_ok(e));
  }
  {
    auto e = cp(cd.J, v2);
    keep({arc(q, e), arc(one, cp(cd.J, a)), 0, 1, "Lhat(" + std::to_string(cd.J + 1) + ")"}, lower_ok(e));
  }
  for (int i = 1; i <= cd.I; ++i) {
    auto s = cp(-i + 1, one);
    keep({arc(s, p), arc(cp(-i + 1, a), cp(-i, a)), 0, 2, "Uhat(" + std::to_string(i) + ")"}, upper_ok(s));
  }
  {
    auto s = cp(-cd.I, one);
    keep({arc(s, p), arc(cp(-cd.I, a), v2), 0, 2, "Uhat(" + std::to_string(cd.I + 1) + ")"}, upper_ok(s));
  }
  return out;
}

/// Bucketed membership test for a rectangle family.
class rect_index {
 public:
  rect_index() = default;
  explicit rect_index(const std::vector<rect>& rs, double slack = 1e-10, int bins = 512)
      : rects_(rs), slack_(slack), bins_(bins), table_(bins) {
    const double width = two_pi / bins;
    for (std::size_t i = 0; i < rects_.size(); ++i) {
      const auto& w = rects_[i].w;
      double s = w.start().theta() - slack, e = w.start().theta() + w.sweep() + slack;
      int b0 = int(std::floor(s / width)), b1 = int(std::floor(e / width));
      for (int b = b0; b <= b1 && b - b0 < bins; ++b) table_[((b % bins) + bins) % bins].push_back(int(i));
    }
  }

  /// Index of a rectangle containing (u, w), or -1.
  int find(double u, double w) const {
    if (rects_.empty()) return -1;
    int b = std::min(bins_ - 1, int(w / (two_pi / bins_)));
    for (int i : table_[b])
      if (rects_[i].contains(u, w, slack_)) return i;
    return -1;
  }
  bool contains(double u, double w) const { return find(u, w) >= 0; }
  const std::vector<rect>& rects() const { return rects_; }

 private:
  std::vector<rect> rects_;
  double slack_ = 1e-10;
  int bins_ = 512;
  std::vector<std::vector<int>> table_;
};

}  // namespace fuchsian
