#pragma once

#include <random>
#include <string>
#include <vector>

#include "fuchsian/fuchsian.hpp"
#include "oracle_values.hpp"

namespace testing_support {

inline const std::vector<std::string>& signatures() {
  static const std::vector<std::string> s{"0;2,3;1", "1;;1", "0;2,2;2", "1;2,3,7;2", "2;2,5,8;2", "0;3,3,4;2"};
  return s;
}

inline const fuchsian::marked_polygon& polygon(const std::string& s) {
  static std::map<std::string, fuchsian::marked_polygon> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, fuchsian::build_canonical(s)).first;
  return it->second;
}

/// Random disk automorphism with |b| < 1 after normalization.
inline fuchsian::moebius random_moebius(std::mt19937_64& g) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  fuchsian::complex b(U(g), U(g));
  b *= 0.9 / (1.0 + std::abs(b));
  fuchsian::complex rot = std::polar(1.0, fuchsian::pi * U(g));
  return fuchsian::moebius(rot, b * rot);
}

inline double random_angle(std::mt19937_64& g) {
  return std::uniform_real_distribution<double>(0.0, fuchsian::two_pi)(g);
}

}  // namespace testing_support
