#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fuchsian/circle.hpp"
#include "fuchsian/config.hpp"
#include "fuchsian/geodesic.hpp"
#include "fuchsian/moebius.hpp"
#include "fuchsian/signature.hpp"

namespace fuchsian {

/// Closed-form generators of the standard-position blocks. `ell` is the number of blocks.
namespace standard {

inline complex e_i(double angle) { return std::polar(1.0, angle); }

/// v = e^{i pi / ell}, the midpoint direction of the standard sector.
inline complex v(int ell) { return e_i(pi / ell); }

/// Half-angle subtended by one bounding circle of the order-m block.
inline double elliptic_theta(int ell, int m) {
  return std::atan(std::sin(pi / ell) / (std::cos(pi / ell) + std::cos(pi / m)));
}

/// The interior vertex of the order-m block.
inline complex elliptic_vertex(int ell, int m) {
  if (ell == 2 && m == 2) return complex(0.0);
  double r = std::cos((ell + m) * pi / (2.0 * ell * m)) / std::cos((ell - m) * pi / (2.0 * ell * m));
  return std::polar(r, pi / ell);
}

/// Clockwise rotation by 2pi/m about the elliptic vertex, via conjugation of a diagonal matrix.
inline moebius elliptic_generator(int ell, int m) {
  complex V = elliptic_vertex(ell, m);
  moebius T(complex(1.0), -V);
  return T.inverse() * moebius::rotation(-two_pi / m) * T;
}

/// The same map from its explicit fractional-linear expression.
inline moebius elliptic_generator_explicit(int ell, int m) {
  double cm = std::cos(pi / m), cl = std::cos(pi / ell);
  complex w = e_i(pi / ell);
  return moebius::from_matrix(1.0 + cm * w, -(cm + cl) * w, (cm + cl) * std::conj(w),
                              -(1.0 + cm * std::conj(w)));
}

inline moebius parabolic_generator(int ell) {
  return moebius::from_matrix(2.0 * e_i(two_pi / ell), -(e_i(two_pi / ell) + e_i(3.0 * pi / ell)),
                              e_i(pi / ell) + 1.0, -2.0 * e_i(pi / ell));
}

inline moebius hyperbolic_a(int ell) {
  double c = std::cos(pi / (4.0 * ell));
  return moebius::from_matrix(-e_i(5.0 * pi / (4.0 * ell)), c * e_i(3.0 * pi / (2.0 * ell)), -c,
                              e_i(pi / (4.0 * ell)));
}

inline moebius hyperbolic_b(int ell) {
  double r = pi / (2.0 * ell);
  return moebius::rotation(r) * hyperbolic_a(ell).inverse() * moebius::rotation(-r);
}

}  // namespace standard

struct vertex {
  bool ideal = true;
  int order = 0;      // elliptic order; 0 for ideal vertices
  complex z;          // position in the closed disk
  boundary_point projection;  // z / |z| (the block's midpoint direction at the origin)

  boundary_point point() const { return projection; }
};

struct aux_triple {
  boundary_point P, Q, M;
};

struct block {
  symbol sym;
  int index = 0;   // 1-based block number j
  int start = 0;   // vertex index of the block's first corner
  int size = 0;    // number of sides in the block (4 or 2)
  double rotation = 0.0;  // 2pi(j-1)/ell
  std::vector<moebius> standard_generators;  // per side, before rotating into place
};

struct marked_polygon {
  signature sig;
  int ell = 0;
  int N = 0;
  std::vector<vertex> vertices;       // V_0 .. V_{N-1}
  std::vector<moebius> generators;    // gamma_1 .. gamma_N, stored 0-based
  std::vector<int> pairing;           // pairing[k-1] = partner side (1-based)
  std::vector<aux_triple> aux;        // per vertex
  std::vector<block> blocks;
  std::vector<geodesic> sides;        // side k joins V_{k-1} and V_k, stored 0-based

  int wrap(int k) const { return ((k % N) + N) % N; }
  /// Vertex with cyclic index, so V_N = V_0.
  const vertex& V(int k) const { return vertices[wrap(k)]; }
  /// Side generator with cyclic 1-based index, so gamma_0 = gamma_N.
  const moebius& gamma(int k) const { return generators[wrap(k - 1)]; }
  int pair(int k) const { return pairing[wrap(k - 1)]; }
  const geodesic& side(int k) const { return sides[wrap(k - 1)]; }
  const aux_triple& aux_at(int k) const { return aux[wrap(k)]; }
  /// Block containing vertex k as an interior (non-start) corner, or starting there.
  const block& block_of_vertex(int k) const {
    int kk = wrap(k);
    for (const auto& b : blocks)
      if (kk >= b.start && kk < b.start + b.size) return b;
    return blocks.back();
  }
  std::vector<int> elliptic_indices() const {
    std::vector<int> out;
    for (int k = 0; k < N; ++k)
      if (!vertices[k].ideal) out.push_back(k);
    return out;
  }
};

/// Second endpoints of the sides through an elliptic vertex, and the midpoint between them.
inline aux_triple aux_points(const marked_polygon& poly, int k, bool strict = false) {
  const vertex& vk = poly.V(k);
  if (vk.ideal) {
    if (strict) throw error(errc::not_elliptic, "vertex " + std::to_string(k) + " is ideal");
    return {vk.projection, vk.projection, vk.projection};
  }
  auto Q = geodesic_through_interior(poly.V(k - 1).projection, disk_point{vk.z}).second;
  auto P = geodesic_through_interior(poly.V(k + 1).projection, disk_point{vk.z}).second;
  auto M = boundary_point::from_angle(ccw_midpoint(P.theta(), Q.theta()));
  return {P, Q, M};
}

inline marked_polygon build_canonical(const signature& sig) {
  validate(sig);
  marked_polygon poly;
  poly.sig = sig;
  poly.ell = sig.ell();
  poly.N = sig.sides();
  const int ell = poly.ell, N = poly.N;
  poly.vertices.resize(N);
  poly.generators.resize(N);
  poly.pairing.resize(N);

  auto syms = signature_string(sig);
  const double step = two_pi / ell;
  int s = 0;
  for (int j = 1; j <= ell; ++j) {
    block b;
    b.sym = syms[j - 1];
    b.index = j;
    b.start = s;
    b.rotation = step * (j - 1);
    const double phi = b.rotation;
    auto place = [&](double angle) {
      vertex v;
      v.projection = boundary_point::from_angle(angle + phi);
      v.z = v.projection.z();
      return v;
    };
    switch (b.sym.kind) {
      case symbol_kind::square: {
        b.size = 4;
        moebius a = standard::hyperbolic_a(ell), bb = standard::hyperbolic_b(ell);
        b.standard_generators = {a, bb.inverse(), a.inverse(), bb};
        for (int i = 0; i < 4; ++i) poly.vertices[s + i] = place(i * pi / (2.0 * ell));
        poly.pairing[s] = s + 3;
        poly.pairing[s + 2] = s + 1;
        poly.pairing[s + 1] = s + 4;
        poly.pairing[s + 3] = s + 2;
        break;
      }
      case symbol_kind::finite: {
        b.size = 2;
        moebius c = standard::elliptic_generator(ell, b.sym.order);
        b.standard_generators = {c, c.inverse()};
        poly.vertices[s] = place(0.0);
        vertex mid;
        mid.ideal = false;
        mid.order = b.sym.order;
        complex V1 = standard::elliptic_vertex(ell, b.sym.order);
        mid.z = V1 == complex(0.0) ? V1 : std::polar(std::abs(V1), pi / ell + phi);
        mid.projection = boundary_point::from_angle(pi / ell + phi);
        poly.vertices[s + 1] = mid;
        poly.pairing[s] = s + 2;
        poly.pairing[s + 1] = s + 1;
        break;
      }
      case symbol_kind::infinity: {
        b.size = 2;
        moebius c = standard::parabolic_generator(ell);
        b.standard_generators = {c, c.inverse()};
        poly.vertices[s] = place(0.0);
        poly.vertices[s + 1] = place(pi / ell);
        poly.pairing[s] = s + 2;
        poly.pairing[s + 1] = s + 1;
        break;
      }
    }
    moebius R = moebius::rotation(phi);
    for (int i = 0; i < b.size; ++i)
      poly.generators[s + i] = R * b.standard_generators[i] * R.inverse();
    s += b.size;
    poly.blocks.push_back(std::move(b));
  }

  poly.sides.reserve(N);
  for (int k = 1; k <= N; ++k) {
    const vertex &p = poly.V(k - 1), &q = poly.V(k);
    if (p.ideal && q.ideal) {
      poly.sides.push_back(geodesic_from_boundary_pair(p.projection, q.projection));
    } else if (p.ideal) {
      poly.sides.push_back(geodesic_through_interior(p.projection, disk_point{q.z}));
    } else {
      poly.sides.push_back(geodesic_through_interior(q.projection, disk_point{p.z}));
    }
  }
  poly.aux.resize(N);
  for (int k = 0; k < N; ++k) poly.aux[k] = aux_points(poly, k);
  return poly;
}

inline marked_polygon build_canonical(std::string_view signature_text) {
  return build_canonical(parse_signature(signature_text));
}

/// Connected components of the vertex-cycle graph: gamma_k sends V_{k-1}, V_k to the
/// endpoints of the partner side. Returns the ideal vertices in the class of V_0.
inline std::vector<boundary_point> cusp_orbit(const marked_polygon& poly, double tol = 1e-9) {
  const int N = poly.N;
  std::vector<std::vector<int>> adj(N);
  auto match = [&](complex z) {
    for (int i = 0; i < N; ++i)
      if (poly.vertices[i].ideal && std::abs(poly.vertices[i].z - z) <= tol) return i;
    return -1;
  };
  for (int k = 1; k <= N; ++k) {
    for (int end : {k - 1, k}) {
      const vertex& v = poly.V(end);
      if (!v.ideal) continue;
      int target = match(poly.gamma(k)(v.z));
      if (target >= 0) {
        adj[poly.wrap(end)].push_back(target);
        adj[target].push_back(poly.wrap(end));
      }
    }
  }
  std::vector<bool> seen(N, false);
  std::vector<int> stack{0}, members;
  seen[0] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    members.push_back(i);
    for (int j : adj[i])
      if (!seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  std::sort(members.begin(), members.end());
  std::vector<boundary_point> out;
  for (int i : members) out.push_back(poly.vertices[i].projection);
  return out;
}

}  // namespace fuchsian
