#pragma once

#include <algorithm>
#include <vector>

#include "fuchsian/boundary.hpp"

namespace fuchsian {

struct markov_report {
  bool all_finite = true;
  bool onto_union = true;
  double max_endpoint_residual = 0.0;
  std::vector<orbit_record> orbits;    // upper then lower, per partition point
  std::vector<double> refined;         // sorted angles of the refinement
  std::vector<int> cell_of_interval;   // generator used on [refined_i, refined_{i+1}]
  std::vector<std::vector<int>> transitions;  // interval i -> intervals its image covers

  bool passed() const { return all_finite && onto_union; }
};

namespace detail {

/// Sorted angles with near-duplicates (within tol, including across 0) merged.
inline std::vector<double> merge_angles(std::vector<double> xs, double tol) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  while (out.size() > 1 && two_pi - out.back() + out.front() <= tol) out.pop_back();
  return out;
}

inline int nearest_index(const std::vector<double>& xs, double theta, double* dist) {
  auto it = std::lower_bound(xs.begin(), xs.end(), theta);
  int best = 0;
  double bd = 10.0;
  for (auto cand : {it, it == xs.begin() ? xs.end() - 1 : it - 1}) {
    if (cand == xs.end()) cand = xs.begin();
    double d = angular_distance(*cand, theta);
    if (d < bd) {
      bd = d;
      best = int(cand - xs.begin());
    }
  }
  *dist = bd;
  return best;
}

}  // namespace detail

/// Finite orbits of all partition points, and the interval-onto-union property of the refinement
/// they generate.
inline markov_report markov_check(const marked_polygon& poly, const partition& part,
                                  int max_steps = 10000, const tolerances& tol = {}) {
  markov_report rep;
  std::vector<double> pts;
  for (int k = 0; k < poly.N; ++k) {
    pts.push_back(part.at(k).theta());
    for (auto side : {orbit_side::upper, orbit_side::lower}) {
      auto rec = orbit(poly, part, part.at(k), side, max_steps, tol);
      if (!rec.periodic()) rep.all_finite = false;
      for (const auto& p : rec.points) pts.push_back(p.theta());
      rep.orbits.push_back(std::move(rec));
    }
  }
  if (!rep.all_finite) {
    rep.onto_union = false;
    return rep;
  }
  rep.refined = detail::merge_angles(std::move(pts), tol.revisit);
  const int n = int(rep.refined.size());
  rep.cell_of_interval.resize(n);
  rep.transitions.resize(n);
  for (int i = 0; i < n; ++i) {
    double x0 = rep.refined[i];
    double x1 = i + 1 < n ? rep.refined[i + 1] : rep.refined[0] + two_pi;
    int k = part.cell(wrap_angle(0.5 * (x0 + x1)));
    rep.cell_of_interval[i] = k;
    const moebius& g = poly.gamma(k);
    double d0, d1;
    int j0 = detail::nearest_index(rep.refined, apply(g, boundary_point::from_angle(x0)).theta(), &d0);
    int j1 = detail::nearest_index(rep.refined, apply(g, boundary_point::from_angle(x1)).theta(), &d1);
    rep.max_endpoint_residual = std::max({rep.max_endpoint_residual, d0, d1});
    if (std::max(d0, d1) > tol.revisit) rep.onto_union = false;
    for (int j = j0; j != j1; j = (j + 1) % n) rep.transitions[i].push_back(j);
    if (j0 == j1) rep.onto_union = false;  // image collapsed or wrapped fully
  }
  return rep;
}

}  // namespace fuchsian
