#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <ostream>

#include "fuchsian/circle.hpp"
#include "fuchsian/config.hpp"

namespace fuchsian {

/*
    Orientation-preserving isometries of the unit disk are the matrices

        [ a        b      ]
        [ conj(b)  conj(a)]    with |a|^2 - |b|^2 = 1,

    acting by z -> (a z + b) / (conj(b) z + conj(a)), taken up to a global sign. Only a and b
    are stored. The sign is fixed so that Re(a) >= 0 (Im(a) >= 0 on a tie); |a| >= 1 > |b|, so
    a is always the entry of largest magnitude.
*/
template <typename T>
class basic_moebius {
 public:
  using value_type = T;
  using complex_type = std::complex<T>;

  basic_moebius() : a_(1), b_(0) {}

  /// Scales (a, b) onto the unit-determinant sheet and fixes the sign.
  basic_moebius(complex_type a, complex_type b) {
    if (!finite(a) || !finite(b)) throw error(errc::non_finite, "matrix entries are not finite");
    T det = std::norm(a) - std::norm(b);
    if (!(det > 0)) throw error(errc::invalid_matrix, "|a|^2 - |b|^2 must be positive");
    T s = std::sqrt(det);
    a_ = a / s;
    b_ = b / s;
    if (a_.real() < 0 || (a_.real() == 0 && a_.imag() < 0)) {
      a_ = -a_;
      b_ = -b_;
    }
  }

  static basic_moebius identity() { return {}; }

  /// z -> e^{i angle} z
  static basic_moebius rotation(T angle) {
    return basic_moebius(std::polar(T(1), angle / 2), complex_type(0));
  }

  /// Accepts any matrix proportional to an element of SU(1,1), e.g. a Moebius map written
  /// with unnormalized coefficients.
  static basic_moebius from_matrix(complex_type m00, complex_type m01, complex_type m10,
                                   complex_type m11, T tol = T(1e-10)) {
    complex_type det = m00 * m11 - m01 * m10;
    if (!finite(det) || std::abs(det) == T(0))
      throw error(errc::invalid_matrix, "singular or non-finite matrix");
    complex_type s = std::sqrt(det);
    m00 /= s;
    m01 /= s;
    m10 /= s;
    m11 /= s;
    T scale = std::abs(m00) + std::abs(m01);
    if (std::abs(m10 - std::conj(m01)) > tol * scale || std::abs(m11 - std::conj(m00)) > tol * scale)
      throw error(errc::invalid_matrix, "matrix does not preserve the unit disk");
    return basic_moebius(m00, m01);
  }

  complex_type a() const { return a_; }
  complex_type b() const { return b_; }

  complex_type operator()(complex_type z) const {
    if (!finite(z)) throw error(errc::non_finite, "point is not finite");
    return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
  }

  /// Derivative of the action at z.
  complex_type derivative(complex_type z) const {
    complex_type d = std::conj(b_) * z + std::conj(a_);
    return T(1) / (d * d);
  }

  T trace() const { return T(2) * a_.real(); }

  basic_moebius inverse() const { return basic_moebius(std::conj(a_), -b_); }

  friend basic_moebius operator*(const basic_moebius& m1, const basic_moebius& m2) {
    // [a1 b1; b1* a1*][a2 b2; b2* a2*] = [a1 a2 + b1 b2*, a1 b2 + b1 a2*; ...]
    return basic_moebius(m1.a_ * m2.a_ + m1.b_ * std::conj(m2.b_),
                         m1.a_ * m2.b_ + m1.b_ * std::conj(m2.a_));
  }

  friend std::ostream& operator<<(std::ostream& os, const basic_moebius& m) {
    return os << "[a=" << m.a_ << ", b=" << m.b_ << "]";
  }

  template <typename U>
  basic_moebius<U> cast() const {
    return basic_moebius<U>(std::complex<U>(a_), std::complex<U>(b_));
  }

 private:
  static bool finite(complex_type z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

  complex_type a_;
  complex_type b_;
};

using moebius = basic_moebius<double>;

template <typename T>
basic_moebius<T> compose(const basic_moebius<T>& outer, const basic_moebius<T>& inner) {
  return outer * inner;
}

template <typename T>
basic_moebius<T> inverse(const basic_moebius<T>& m) {
  return m.inverse();
}

template <typename T>
basic_moebius<T> power(basic_moebius<T> m, int n) {
  if (n < 0) {
    m = m.inverse();
    n = -n;
  }
  basic_moebius<T> result;
  while (n > 0) {
    if (n & 1) result = result * m;
    m = m * m;
    n >>= 1;
  }
  return result;
}

/// Frobenius distance between the classes of m1 and m2 in PSU(1,1).
template <typename T>
T distance_up_to_sign(const basic_moebius<T>& m1, const basic_moebius<T>& m2) {
  auto frob = [](std::complex<T> da, std::complex<T> db) {
    return std::sqrt(T(2) * (std::norm(da) + std::norm(db)));
  };
  return std::min(frob(m1.a() - m2.a(), m1.b() - m2.b()), frob(m1.a() + m2.a(), m1.b() + m2.b()));
}

template <typename T>
bool equal_up_to_sign(const basic_moebius<T>& m1, const basic_moebius<T>& m2, T tol) {
  return distance_up_to_sign(m1, m2) <= tol;
}

/// Action on a boundary point; the image is re-projected onto the circle.
inline boundary_point apply(const moebius& m, const boundary_point& x) {
  return boundary_point::from_complex(m(x.z()));
}

inline complex apply(const moebius& m, complex z) { return m(z); }

enum class moebius_kind { identity, elliptic, parabolic, hyperbolic };

inline const char* to_string(moebius_kind k) {
  switch (k) {
    case moebius_kind::identity: return "identity";
    case moebius_kind::elliptic: return "elliptic";
    case moebius_kind::parabolic: return "parabolic";
    case moebius_kind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

struct classification {
  moebius_kind kind = moebius_kind::identity;
  double rotation_angle = 0.0;      // elliptic: unsigned angle in (0, pi], from the trace
  double signed_rotation = 0.0;     // elliptic: argument of the derivative at the fixed point
  double translation_length = 0.0;  // hyperbolic
  std::optional<complex> fixed_point;  // elliptic: in the disk; parabolic: on the circle
};

/// Interior fixed point of an elliptic element, or the boundary fixed point of a parabolic one.
inline std::optional<complex> fixed_point(const moebius& m) {
  // conj(b) z^2 + (conj(a) - a) z - b = 0
  complex qa = std::conj(m.b()), qb = std::conj(m.a()) - m.a(), qc = -m.b();
  if (std::abs(qa) < 1e-300) return std::nullopt;
  complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
  complex z1 = (-qb + disc) / (2.0 * qa), z2 = (-qb - disc) / (2.0 * qa);
  return std::abs(z1) <= std::abs(z2) ? z1 : z2;
}

/// Trace classification with a band of width `tol` around |trace| = 2.
inline classification classify(const moebius& m, double tol = 1e-8) {
  classification c;
  double t = std::abs(m.trace());
  if (std::abs(t - 2.0) <= tol) {
    bool rot_free = std::abs(m.b()) <= tol && std::abs(m.a().imag()) <= tol;
    c.kind = rot_free ? moebius_kind::identity : moebius_kind::parabolic;
    if (c.kind == moebius_kind::parabolic) {
      auto fp = fixed_point(m);
      if (fp) c.fixed_point = *fp / std::abs(*fp);
    }
    return c;
  }
  if (t < 2.0) {
    c.kind = moebius_kind::elliptic;
    c.rotation_angle = 2.0 * std::acos(t / 2.0);
    complex z0 = std::abs(m.b()) == 0.0 ? complex(0.0) : fixed_point(m).value_or(complex(0.0));
    c.fixed_point = z0;
    c.signed_rotation = std::arg(m.derivative(z0));
    return c;
  }
  c.kind = moebius_kind::hyperbolic;
  c.translation_length = 2.0 * std::acosh(t / 2.0);
  return c;
}

struct euclidean_circle {
  complex center;
  double radius = 0.0;
};

/// The locus |conj(b) z + conj(a)| = 1, where the action has unit derivative modulus.
inline euclidean_circle isometric_circle(const moebius& m, double tol = 1e-14) {
  if (std::abs(m.b()) <= tol)
    throw error(errc::no_isometric_circle, "rotation about the origin has no isometric circle");
  complex cb = std::conj(m.b());
  return {-std::conj(m.a()) / cb, 1.0 / std::abs(cb)};
}

}  // namespace fuchsian
