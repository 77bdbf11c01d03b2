#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fuchsian/circle.hpp"
#include "fuchsian/moebius.hpp"

namespace fuchsian {

enum class arc_orientation { ccw, cw };

/// Counter-clockwise arc from `start` sweeping `sweep` radians. Clockwise input is converted by
/// swapping endpoints.
class directed_arc {
 public:
  directed_arc() = default;

  directed_arc(const boundary_point& from, const boundary_point& to,
               arc_orientation orient = arc_orientation::ccw) {
    if (orient == arc_orientation::cw) {
      start_ = to;
      end_ = from;
    } else {
      start_ = from;
      end_ = to;
    }
    sweep_ = ccw_sweep(start_.theta(), end_.theta());
  }

  const boundary_point& start() const { return start_; }
  const boundary_point& end() const { return end_; }
  double sweep() const { return sweep_; }
  bool degenerate(double tol = 1e-12) const { return sweep_ <= tol; }

  bool contains(double theta, double slack = 0.0) const {
    double d = ccw_sweep(start_.theta(), theta);
    return d <= sweep_ + slack || d >= two_pi - slack;
  }

  directed_arc rotated(double angle) const {
    return directed_arc(start_.rotated(angle), end_.rotated(angle));
  }

  /// Image under an orientation-preserving map of the circle.
  directed_arc image(const moebius& m) const { return directed_arc(apply(m, start_), apply(m, end_)); }

 private:
  boundary_point start_, end_;
  double sweep_ = 0.0;
};

struct rect {
  directed_arc u;
  directed_arc w;
  int block = 0;   // 1-based block index
  int gamma = 0;   // 1-based side whose generator acts on the w-arc
  std::string label;

  double measure() const { return u.sweep() * w.sweep(); }
  bool contains(double tu, double tw, double slack = 0.0) const {
    return w.contains(tw, slack) && u.contains(tu, slack);
  }
  rect rotated(double angle) const { return {u.rotated(angle), w.rotated(angle), block, gamma, label}; }
  rect image(const moebius& m) const { return {u.image(m), w.image(m), block, gamma, label}; }
};

/// Axis-aligned box in the chart [0, 2pi]^2.
struct box {
  double x0, x1, y0, y1;
  double area() const { return (x1 - x0) * (y1 - y0); }
};

namespace detail {

/// [start, start + sweep] as at most two intervals inside [0, 2pi].
inline std::vector<std::pair<double, double>> unwrap(const directed_arc& a) {
  double s = a.start().theta(), e = s + a.sweep();
  if (e <= two_pi) return {{s, e}};
  return {{s, two_pi}, {0.0, e - two_pi}};
}

}  // namespace detail

/// Rectangles crossing the 0/2pi seam become up to four boxes in the chart.
inline std::vector<box> to_boxes(const rect& r) {
  std::vector<box> out;
  for (auto [x0, x1] : detail::unwrap(r.u))
    for (auto [y0, y1] : detail::unwrap(r.w))
      if (x1 > x0 && y1 > y0) out.push_back({x0, x1, y0, y1});
  return out;
}

inline std::vector<box> to_boxes(const std::vector<rect>& rs) {
  std::vector<box> out;
  for (const auto& r : rs)
    for (const auto& b : to_boxes(r)) out.push_back(b);
  return out;
}

inline std::vector<box> clip(const std::vector<box>& bs, const box& window) {
  std::vector<box> out;
  for (const auto& b : bs) {
    box c{std::max(b.x0, window.x0), std::min(b.x1, window.x1), std::max(b.y0, window.y0),
          std::min(b.y1, window.y1)};
    if (c.x1 > c.x0 && c.y1 > c.y0) out.push_back(c);
  }
  return out;
}

/// Coverage counts of several box families on a common compressed grid. Grid coordinates closer
/// than `merge` are identified, which removes slivers created by rounding.
class coverage_grid {
 public:
  coverage_grid(const std::vector<std::vector<box>>& families, double merge) {
    std::vector<double> xs{0.0, two_pi}, ys{0.0, two_pi};
    for (const auto& f : families)
      for (const auto& b : f) {
        xs.insert(xs.end(), {b.x0, b.x1});
        ys.insert(ys.end(), {b.y0, b.y1});
      }
    xs_ = compress(std::move(xs), merge);
    ys_ = compress(std::move(ys), merge);
    nx_ = int(xs_.size()) - 1;
    ny_ = int(ys_.size()) - 1;
    counts_.assign(families.size(), std::vector<int>(std::size_t(nx_) * ny_, 0));
    for (std::size_t f = 0; f < families.size(); ++f)
      for (const auto& b : families[f]) {
        int i0 = snap(xs_, b.x0), i1 = snap(xs_, b.x1), j0 = snap(ys_, b.y0), j1 = snap(ys_, b.y1);
        for (int i = i0; i < i1; ++i)
          for (int j = j0; j < j1; ++j) ++counts_[f][std::size_t(i) * ny_ + j];
      }
  }

  /// Sum over cells of cell_area * fn(counts of each family).
  template <typename Fn>
  double integrate(Fn fn) const {
    double total = 0.0;
    std::vector<int> c(counts_.size());
    for (int i = 0; i < nx_; ++i)
      for (int j = 0; j < ny_; ++j) {
        for (std::size_t f = 0; f < counts_.size(); ++f) c[f] = counts_[f][std::size_t(i) * ny_ + j];
        double v = fn(c);
        if (v != 0.0) total += v * (xs_[i + 1] - xs_[i]) * (ys_[j + 1] - ys_[j]);
      }
    return total;
  }

 private:
  static std::vector<double> compress(std::vector<double> v, double merge) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
      if (out.empty() || x - out.back() > merge) out.push_back(x);
    out.front() = 0.0;
    out.back() = two_pi;
    return out;
  }
  static int snap(const std::vector<double>& grid, double x) {
    auto it = std::lower_bound(grid.begin(), grid.end(), x);
    int i = int(it - grid.begin());
    if (i == int(grid.size())) return i - 1;
    if (i > 0 && x - grid[i - 1] < grid[i] - x) return i - 1;
    return i;
  }

  std::vector<double> xs_, ys_;
  int nx_ = 0, ny_ = 0;
  std::vector<std::vector<int>> counts_;
};

/// Measure of the union.
inline double union_measure(const std::vector<box>& a, double merge = 1e-10) {
  coverage_grid g({a}, merge);
  return g.integrate([](const std::vector<int>& c) { return c[0] > 0 ? 1.0 : 0.0; });
}

/// Sum over pairs of the measure of their intersection.
inline double pairwise_overlap(const std::vector<box>& a, double merge = 1e-10) {
  coverage_grid g({a}, merge);
  return g.integrate([](const std::vector<int>& c) { return c[0] > 1 ? 0.5 * c[0] * (c[0] - 1) : 0.0; });
}

inline double symmetric_difference(const std::vector<box>& a, const std::vector<box>& b,
                                   double merge = 1e-10) {
  coverage_grid g({a, b}, merge);
  return g.integrate([](const std::vector<int>& c) { return (c[0] > 0) != (c[1] > 0) ? 1.0 : 0.0; });
}

/// Measure of the part of `a` not covered by `b`.
inline double difference_measure(const std::vector<box>& a, const std::vector<box>& b,
                                 double merge = 1e-10) {
  coverage_grid g({a, b}, merge);
  return g.integrate([](const std::vector<int>& c) { return c[0] > 0 && c[1] == 0 ? 1.0 : 0.0; });
}

}  // namespace fuchsian
