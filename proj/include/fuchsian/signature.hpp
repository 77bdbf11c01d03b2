#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "fuchsian/circle.hpp"
#include "fuchsian/config.hpp"

namespace fuchsian {

/// Exact value of 2g - 2 + sum(1 - 1/m_i) + t as a reduced fraction.
struct rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  rational& operator+=(rational o) {
    std::int64_t n = num * o.den + o.num * den, d = den * o.den;
    std::int64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return *this;
  }
  double value() const { return double(num) / double(den); }
};

/// (g; m_1, ..., m_r; t). Elliptic orders are kept sorted ascending; `input_order` remembers
/// the permutation applied to the orders as given.
struct signature {
  int genus = 0;
  std::vector<int> orders;
  int cusps = 1;
  std::vector<int> input_order;

  int ell() const { return genus + int(orders.size()) + cusps - 1; }
  int sides() const { return 4 * genus + 2 * int(orders.size()) + 2 * (cusps - 1); }

  rational euler_excess() const {
    rational x{2 * genus - 2 + cusps, 1};
    for (int m : orders) x += rational{m - 1, m};
    return x;
  }

  /// Hyperbolic area 2*pi*(2g - 2 + t + sum(1 - 1/m_i)).
  double area() const { return two_pi * euler_excess().value(); }

  std::string to_string() const {
    std::string s = std::to_string(genus) + ";";
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(orders[i]);
    }
    return s + ";" + std::to_string(cusps);
  }

  friend bool operator==(const signature& a, const signature& b) {
    return a.genus == b.genus && a.orders == b.orders && a.cusps == b.cusps;
  }
};

/// Throws InvalidSignature naming the violated constraint.
inline void validate(const signature& sig) {
  if (sig.genus < 0) throw error(errc::invalid_signature, "genus must be non-negative");
  if (sig.cusps < 1) throw error(errc::invalid_signature, "t >= 1 required (at least one cusp)");
  for (int m : sig.orders)
    if (m < 2) throw error(errc::invalid_signature, "elliptic orders must be >= 2");
  if (!std::is_sorted(sig.orders.begin(), sig.orders.end()))
    throw error(errc::invalid_signature, "elliptic orders must be sorted ascending");
  rational x = sig.euler_excess();
  if (x.num <= 0)
    throw error(errc::invalid_signature,
                "area condition violated: 2g-2+sum(1-1/m)+t = " + std::to_string(x.num) +
                    (x.den == 1 ? "" : "/" + std::to_string(x.den)) + " <= 0");
}

inline signature make_signature(int genus, std::vector<int> orders, int cusps) {
  signature sig;
  sig.genus = genus;
  sig.cusps = cusps;
  sig.input_order.resize(orders.size());
  std::iota(sig.input_order.begin(), sig.input_order.end(), 0);
  std::stable_sort(sig.input_order.begin(), sig.input_order.end(),
                   [&](int i, int j) { return orders[i] < orders[j]; });
  for (int i : sig.input_order) sig.orders.push_back(orders[i]);
  validate(sig);
  return sig;
}

/// Parses "g;m1,...,mr;t"; the middle field may be empty and whitespace is ignored.
inline signature parse_signature(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&](const std::string& why) {
    return error(errc::parse_error, "signature '" + std::string(text) + "': " + why);
  };
  auto first = s.find(';');
  auto second = first == std::string::npos ? first : s.find(';', first + 1);
  if (second == std::string::npos || s.find(';', second + 1) != std::string::npos)
    throw bad("expected the form g;m1,...,mr;t");
  auto to_int = [&](const std::string& field) {
    if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw bad("'" + field + "' is not a non-negative integer");
    if (field.size() > 6) throw bad("'" + field + "' is too large");
    return std::stoi(field);
  };
  int g = to_int(s.substr(0, first));
  int t = to_int(s.substr(second + 1));
  std::vector<int> orders;
  std::string mid = s.substr(first + 1, second - first - 1);
  if (!mid.empty()) {
    std::size_t pos = 0;
    while (true) {
      auto comma = mid.find(',', pos);
      orders.push_back(to_int(mid.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return make_signature(g, std::move(orders), t);
}

enum class symbol_kind { square, finite, infinity };

struct symbol {
  symbol_kind kind = symbol_kind::square;
  int order = 0;  // finite symbols only

  friend bool operator==(const symbol&, const symbol&) = default;
};

/// The block alphabet: g squares, the sorted orders, then t-1 infinities.
inline std::vector<symbol> signature_string(const signature& sig) {
  std::vector<symbol> s;
  for (int i = 0; i < sig.genus; ++i) s.push_back({symbol_kind::square, 0});
  for (int m : sig.orders) s.push_back({symbol_kind::finite, m});
  for (int i = 0; i + 1 < sig.cusps; ++i) s.push_back({symbol_kind::infinity, 0});
  return s;
}

/// Human-readable form, e.g. "□□258∞"; orders above 9 are parenthesised.
inline std::string to_string(const std::vector<symbol>& s) {
  std::string out;
  for (const auto& sym : s) {
    switch (sym.kind) {
      case symbol_kind::square: out += "□"; break;
      case symbol_kind::infinity: out += "∞"; break;
      case symbol_kind::finite:
        out += sym.order < 10 ? std::to_string(sym.order) : "(" + std::to_string(sym.order) + ")";
        break;
    }
  }
  return out;
}

}  // namespace fuchsian
