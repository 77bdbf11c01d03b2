#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "fuchsian/attractor.hpp"

namespace fuchsian {

struct simulation_options {
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  long max_iters = 100000;
  int post_entry_steps = 1000;
  double diagonal_buffer = 1e-6;
  unsigned threads = 0;  // 0: hardware concurrency
  bool record_paths = false;
};

struct entry_trace {
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  double u0 = 0.0, w0 = 0.0;
  long K = -1;             // iterations until (u, w) lies in Omega
  long escape_step = -1;   // first n <= K with F^n(u0, w0) outside Phi
  bool entered = false;
  int exits_after_entry = 0;
  std::vector<std::pair<double, double>> path;  // only when requested
};

/// Seed of the independent generator for one sample.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits; independent of the standard library's
/// distribution implementations.
inline double unit_double(std::mt19937_64& g) { return double(g() >> 11) * 0x1.0p-53; }

inline entry_trace simulate_one(const marked_polygon& poly, const partition& part,
                                const rect_index& omega, const rect_index& phi,
                                std::size_t index, const simulation_options& opt) {
  entry_trace tr;
  tr.sample = index;
  tr.seed = opt.seed;
  std::mt19937_64 gen(sample_seed(opt.seed, index));
  double u, w;
  do {
    u = two_pi * unit_double(gen);
    w = two_pi * unit_double(gen);
  } while (angular_distance(u, w) < opt.diagonal_buffer);
  tr.u0 = u;
  tr.w0 = w;
  complex zu = std::polar(1.0, u), zw = std::polar(1.0, w);
  auto advance = [&] {
    const moebius& g = poly.gamma(part.cell(w));
    zu = g(zu);
    zw = g(zw);
    zu /= std::abs(zu);
    zw /= std::abs(zw);
    u = wrap_angle(std::arg(zu));
    w = wrap_angle(std::arg(zw));
  };
  for (long n = 0; n <= opt.max_iters; ++n) {
    if (opt.record_paths) tr.path.emplace_back(u, w);
    if (tr.escape_step < 0 && !phi.contains(u, w)) tr.escape_step = n;
    if (omega.contains(u, w)) {
      tr.K = n;
      tr.entered = true;
      break;
    }
    if (n == opt.max_iters) break;
    advance();
  }
  if (!tr.entered) return tr;
  for (int s = 0; s < opt.post_entry_steps; ++s) {
    advance();
    if (!omega.contains(u, w)) ++tr.exits_after_entry;
  }
  return tr;
}

/// Entry times into Omega for random off-diagonal starts. Deterministic in (seed, sample index)
/// regardless of the thread count.
inline std::vector<entry_trace> simulate_entry(const marked_polygon& poly, const partition& part,
                                               const attractor_domain& dom,
                                               const simulation_options& opt,
                                               const tolerances& tol = {}) {
  rect_index omega(dom.rects, tol.membership);
  rect_index phi(phi_set(poly, part), tol.membership);
  std::vector<entry_trace> out(opt.samples);
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = unsigned(std::min<std::size_t>(threads, std::max<std::size_t>(1, opt.samples)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < opt.samples; i += threads)
        out[i] = simulate_one(poly, part, omega, phi, i, opt);
    });
  for (auto& th : pool) th.join();
  return out;
}

struct entry_summary {
  std::size_t samples = 0;
  std::size_t entered = 0;
  long max_K = 0;
  double mean_K = 0.0;
  long exits_after_entry = 0;
};

inline entry_summary summarize(const std::vector<entry_trace>& traces) {
  entry_summary s;
  s.samples = traces.size();
  double sum = 0.0;
  for (const auto& t : traces) {
    if (!t.entered) continue;
    ++s.entered;
    s.max_K = std::max(s.max_K, t.K);
    sum += double(t.K);
    s.exits_after_entry += t.exits_after_entry;
  }
  if (s.entered) s.mean_K = sum / double(s.entered);
  return s;
}

}  // namespace fuchsian
