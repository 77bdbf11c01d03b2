#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuchsian/polygon.hpp"

namespace fuchsian {

enum class partition_mode { left, right, midpoint, custom };

inline const char* to_string(partition_mode m) {
  switch (m) {
    case partition_mode::left: return "left";
    case partition_mode::right: return "right";
    case partition_mode::midpoint: return "midpoint";
    case partition_mode::custom: return "custom";
  }
  return "?";
}

/// A_0 .. A_{N-1} with A_N = A_0 = V_0.
struct partition {
  partition_mode mode = partition_mode::midpoint;
  std::vector<boundary_point> A;
  std::vector<bool> elliptic;
  std::vector<double> custom;  // one angle per elliptic vertex, custom mode only
  bool in_guarantee_range = true;  // every elliptic A_k in [P_k, Q_k]
  std::vector<double> angles;      // theta of A_0 .. A_{N-1}, strictly increasing

  int size() const { return int(A.size()); }
  const boundary_point& at(int k) const {
    int n = size();
    return A[((k % n) + n) % n];
  }

  /// The k in 1..N with theta in [A_{k-1}, A_k).
  int cell(double theta) const {
    auto it = std::upper_bound(angles.begin(), angles.end(), theta);
    return int(it - angles.begin());
  }
};

inline partition make_partition(const marked_polygon& poly, partition_mode mode,
                                const std::vector<double>& custom = {},
                                const tolerances& tol = {}) {
  partition part;
  part.mode = mode;
  part.A.resize(poly.N);
  part.elliptic.assign(poly.N, false);
  auto ell_idx = poly.elliptic_indices();
  if (mode == partition_mode::custom && custom.size() != ell_idx.size())
    throw error(errc::custom_point_out_of_range,
                "custom partition needs " + std::to_string(ell_idx.size()) + " angles, got " +
                    std::to_string(custom.size()));
  part.custom = mode == partition_mode::custom ? custom : std::vector<double>{};
  std::size_t next = 0;
  for (int k = 0; k < poly.N; ++k) {
    const vertex& v = poly.V(k);
    if (v.ideal) {
      part.A[k] = v.projection;
      continue;
    }
    part.elliptic[k] = true;
    const aux_triple& aux = poly.aux_at(k);
    switch (mode) {
      case partition_mode::left: part.A[k] = aux.P; break;
      case partition_mode::right: part.A[k] = aux.Q; break;
      case partition_mode::midpoint: part.A[k] = aux.M; break;
      case partition_mode::custom: {
        auto x = boundary_point::from_angle(custom[next]);
        if (!in_open_arc(x.theta(), poly.V(k - 1).projection.theta(),
                         poly.V(k + 1).projection.theta(), tol.degenerate))
          throw error(errc::custom_point_out_of_range,
                      "custom angle #" + std::to_string(next) + " (vertex " + std::to_string(k) +
                          ") is outside the open arc (V_{k-1}, V_{k+1})");
        part.A[k] = x;
        break;
      }
    }
    ++next;
    if (!in_closed_arc(part.A[k].theta(), aux.P.theta(), aux.Q.theta(), tol.membership))
      part.in_guarantee_range = false;
  }
  part.angles.resize(poly.N);
  for (int k = 0; k < poly.N; ++k) part.angles[k] = part.A[k].theta();
  return part;
}

/// Replaces points within `tol` of a stored special point by that point.
class snapper {
 public:
  snapper() = default;
  snapper(const marked_polygon& poly, const partition& part, double tol) : tol_(tol) {
    for (int k = 0; k < poly.N; ++k) {
      const vertex& v = poly.V(k);
      if (v.ideal) {
        add(v.projection);
      } else {
        const auto& a = poly.aux_at(k);
        add(a.P);
        add(a.Q);
        add(a.M);
      }
      add(part.at(k));
    }
    std::sort(pts_.begin(), pts_.end(),
              [](const auto& x, const auto& y) { return x.theta() < y.theta(); });
  }

  boundary_point operator()(const boundary_point& x) const {
    if (pts_.empty()) return x;
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x.theta(),
                               [](const boundary_point& p, double t) { return p.theta() < t; });
    const boundary_point* best = nullptr;
    double bd = tol_;
    auto consider = [&](const boundary_point& p) {
      double d = angular_distance(p, x);
      if (d <= bd) {
        bd = d;
        best = &p;
      }
    };
    if (it != pts_.end()) consider(*it);
    if (it != pts_.begin()) consider(*(it - 1));
    consider(pts_.front());
    consider(pts_.back());
    return best ? *best : x;
  }

 private:
  void add(const boundary_point& p) { pts_.push_back(p); }
  double tol_ = 1e-10;
  std::vector<boundary_point> pts_;
};

struct step {
  int k = 0;
  boundary_point image;
};

/// f_A(x) = gamma_k(x) on [A_{k-1}, A_k).
inline step f_apply(const marked_polygon& poly, const partition& part, const boundary_point& x) {
  int k = part.cell(x.theta());
  return {k, apply(poly.gamma(k), x)};
}

enum class orbit_side { upper, lower };

struct orbit_record {
  boundary_point start;
  orbit_side side = orbit_side::upper;
  std::vector<boundary_point> points;  // start, then the iterates
  std::vector<int> cells;              // side index used at each step
  int periodic_from = -1;              // index in `points` the orbit returns to
  bool budget_exceeded = false;

  bool periodic() const { return periodic_from >= 0; }
};

namespace detail {

/// Index of a previously seen angle within `tol`, tracking wrap-around at 0.
class revisit_index {
 public:
  explicit revisit_index(double tol) : tol_(tol) {}
  std::optional<int> find(double theta) const {
    auto probe = [&](double lo, double hi) -> std::optional<int> {
      for (auto it = seen_.lower_bound(lo); it != seen_.end() && it->first <= hi; ++it)
        return it->second;
      return std::nullopt;
    };
    if (auto r = probe(theta - tol_, theta + tol_)) return r;
    if (theta < tol_) return probe(theta + two_pi - tol_, two_pi);
    if (theta > two_pi - tol_) return probe(0.0, theta - two_pi + tol_);
    return std::nullopt;
  }
  void insert(double theta, int index) { seen_.emplace(theta, index); }

 private:
  double tol_;
  std::multimap<double, int> seen_;
};

inline bool is_partition_point(const partition& part, const boundary_point& x, double tol,
                               int* index = nullptr) {
  int k = part.cell(x.theta());
  for (int c : {k - 1, k}) {
    if (angular_distance(part.at(c), x) <= tol) {
      if (index) *index = ((c % part.size()) + part.size()) % part.size();
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Iterates f_A from x. When x is a partition point A_k the first step is gamma_{k+1} (upper)
/// or gamma_k (lower); afterwards the half-open convention applies. With `one_sided` the lower
/// orbit uses gamma_k at every partition point it meets, not only the first.
inline orbit_record orbit(const marked_polygon& poly, const partition& part, boundary_point x,
                          orbit_side side, int max_steps = 10000, const tolerances& tol = {},
                          bool one_sided = false) {
  snapper snap(poly, part, tol.snap);
  orbit_record rec;
  rec.side = side;
  x = snap(x);
  rec.start = x;
  rec.points.push_back(x);
  detail::revisit_index seen(tol.revisit);
  seen.insert(x.theta(), 0);
  for (int n = 0; n < max_steps; ++n) {
    int k;
    int a = 0;
    bool override = n == 0 || (one_sided && side == orbit_side::lower);
    if (override && detail::is_partition_point(part, x, tol.snap, &a))
      k = side == orbit_side::upper ? a + 1 : (a == 0 ? poly.N : a);
    else
      k = part.cell(x.theta());
    x = snap(apply(poly.gamma(k), x));
    rec.cells.push_back(k);
    if (auto hit = seen.find(x.theta())) {
      rec.periodic_from = *hit;
      rec.points.push_back(x);
      return rec;
    }
    seen.insert(x.theta(), int(rec.points.size()));
    rec.points.push_back(x);
  }
  rec.budget_exceeded = true;
  return rec;
}

/// n iterations of f_A with snapping.
inline boundary_point iterate(const marked_polygon& poly, const partition& part, boundary_point x,
                              int n, const snapper& snap) {
  for (int i = 0; i < n; ++i) x = snap(f_apply(poly, part, x).image);
  return x;
}

struct cycle_data {
  int k = 0;
  int m = 0;
  int J = 0;
  int I = 0;
  int matching_steps = 0;  // upper-orbit steps in the matching equation
  boundary_point end_of_cycle;
  bool degenerate = false;
  bool on_block_corner = false;  // A_k coincides with V_{k-1} or V_{k+1}
  double matching_residual = 0.0;
  bool monotone_descent = true;
  std::vector<boundary_point> rotation_orbit;  // c^0(A_k) .. c^{J+1}(A_k)
};

inline cycle_data cycle(const marked_polygon& poly, const partition& part, int k,
                        const tolerances& tol = {}) {
  const vertex& vk = poly.V(k);
  if (vk.ideal) throw error(errc::not_elliptic, "vertex " + std::to_string(k) + " is ideal");
  cycle_data cd;
  cd.k = poly.wrap(k);
  cd.m = vk.order;
  const moebius& c = poly.gamma(k);
  const double lo = poly.V(k - 1).projection.theta(), hi = poly.V(k + 1).projection.theta();
  snapper snap(poly, part, tol.snap);

  boundary_point x = part.at(k);
  cd.rotation_orbit.push_back(x);
  if (!in_open_arc(x.theta(), lo, hi, tol.snap)) {
    // only for order 2 with A_k on V_{k-1} or V_{k+1}; c = c^{-1} there, so the cycle is trivial
    cd.end_of_cycle = snap(apply(c, x));
    cd.rotation_orbit.push_back(cd.end_of_cycle);
    cd.on_block_corner = true;
    cd.I = cd.matching_steps = cd.m - 2;
    boundary_point up = snap(apply(poly.gamma(k + 1), x)), down = snap(apply(c, x));
    cd.matching_residual = angular_distance(iterate(poly, part, up, cd.I, snap), down);
    return cd;
  }
  int j = 0;
  for (;; ++j) {
    boundary_point y = snap(apply(c, x));
    cd.rotation_orbit.push_back(y);
    if (!in_open_arc(y.theta(), lo, hi, tol.snap)) break;
    if (ccw_sweep(lo, y.theta()) >= ccw_sweep(lo, x.theta())) cd.monotone_descent = false;
    x = y;
    if (j > cd.m) throw error(errc::not_elliptic, "rotation orbit never leaves the block");
  }
  cd.J = j;
  cd.end_of_cycle = cd.rotation_orbit.back();
  cd.degenerate = angular_distance(cd.end_of_cycle.theta(), lo) <= tol.snap;
  cd.I = cd.m - cd.J - 2;
  // the upper orbit reaches V_{k+1} one step early when the lower one lands on V_{k-1}
  cd.matching_steps = cd.degenerate ? cd.I - 1 : cd.I;

  const boundary_point& A = part.at(k);
  boundary_point upper = snap(apply(poly.gamma(k + 1), A));
  boundary_point lower = snap(apply(poly.gamma(k), A));
  if (cd.matching_steps < 0) {
    cd.matching_residual = 1.0;  // cannot happen for a rotation of order m
    return cd;
  }
  boundary_point lhs = iterate(poly, part, upper, cd.matching_steps, snap);
  boundary_point rhs = iterate(poly, part, lower, cd.J, snap);
  if (cd.degenerate)
    cd.matching_residual =
        std::max(angular_distance(lhs.theta(), hi), angular_distance(rhs.theta(), lo));
  else
    cd.matching_residual = angular_distance(lhs, rhs);
  return cd;
}

}  // namespace fuchsian
