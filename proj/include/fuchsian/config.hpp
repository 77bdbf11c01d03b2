#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fuchsian {

enum class errc {
  non_finite,
  invalid_matrix,
  no_isometric_circle,
  degenerate_geodesic,
  invalid_signature,
  not_elliptic,
  custom_point_out_of_range,
  diagonal_point,
  partition_out_of_guarantee_range,
  order_two,
  parse_error,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::non_finite: return "NonFinite";
    case errc::invalid_matrix: return "InvalidMatrix";
    case errc::no_isometric_circle: return "NoIsometricCircle";
    case errc::degenerate_geodesic: return "DegenerateGeodesic";
    case errc::invalid_signature: return "InvalidSignature";
    case errc::not_elliptic: return "NotElliptic";
    case errc::custom_point_out_of_range: return "CustomPointOutOfRange";
    case errc::diagonal_point: return "DiagonalPoint";
    case errc::partition_out_of_guarantee_range: return "PartitionOutOfGuaranteeRange";
    case errc::order_two: return "OrderTwo";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Every numeric threshold used by the library lives here.
struct tolerances {
  double structural = 1e-10;  // matrix identities, orthogonality, unit modulus
  double spectral = 1e-8;     // |trace| classification
  double geometry = 1e-9;     // side containment, vertex angles, side pairing
  double angle_wrap = 1e-12;  // canonicalization guard near 2*pi
  double degenerate = 1e-12;  // coincident boundary points / collinearity
  double revisit = 1e-9;      // orbit periodicity detection
  double snap = 1e-10;        // identification with stored vertices and partition points
  double membership = 1e-10;  // closed-rectangle membership slack on arcs
  double coordinate_merge = 1e-10;  // endpoint identification in rectangle measures

  tolerances scaled(double factor) const {
    tolerances t = *this;
    t.structural *= factor;
    t.spectral *= factor;
    t.geometry *= factor;
    t.revisit *= factor;
    t.snap *= factor;
    t.membership *= factor;
    t.coordinate_merge *= factor;
    return t;
  }
};

/// Named profiles: "default", "strict" (x0.1) and "loose" (x100).
inline tolerances tolerance_profile(std::string_view name) {
  if (name.empty() || name == "default") return {};
  if (name == "strict") return tolerances{}.scaled(0.1);
  if (name == "loose") return tolerances{}.scaled(100.0);
  throw error(errc::parse_error, "unknown tolerance profile '" + std::string(name) + "'");
}

/// Profile selected by FUCHSIAN_TOLERANCE_PROFILE, falling back to the defaults.
inline tolerances tolerances_from_environment() {
  const char* env = std::getenv("FUCHSIAN_TOLERANCE_PROFILE");
  return tolerance_profile(env ? std::string_view(env) : std::string_view());
}

}  // namespace fuchsian
