#pragma once

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace fuchsian::cli {

enum exit_code : int { ok = 0, check_failed = 1, config_error = 2 };

struct io_streams {
  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
};

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error(errc::parse_error, "cannot open '" + path + "' for writing");
  f << text;
}

/// JSON goes to the configured path, or to the output stream when none is set.
inline void emit_json(const run_config& c, const json& j, io_streams& io) {
  std::string text = j.dump(2) + "\n";
  if (c.json_path.empty()) io.out << text;
  else write_text(c.json_path, text);
}

inline marked_polygon polygon_of(const run_config& c) {
  if (c.signature.empty()) throw error(errc::parse_error, "--signature is required");
  return build_canonical(c.signature);
}

inline partition partition_of(const marked_polygon& poly, const run_config& c, const tolerances& tol) {
  auto spec = parse_partition(c.partition);
  return make_partition(poly, spec.mode, spec.angles, tol);
}

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"polygon", "cycle", "markov", "bijectivity", "attraction"};
  return names;
}

/// "all" expands to every check except the Monte Carlo one.
inline std::vector<std::string> resolve_checks(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  auto add = [&](const std::string& n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  for (const auto& item : requested) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name == "all") {
        for (const char* n : {"polygon", "cycle", "markov", "bijectivity"}) add(n);
      } else if (std::find(known_checks().begin(), known_checks().end(), name) != known_checks().end()) {
        add(name);
      } else {
        throw error(errc::parse_error, "unknown check '" + name + "'");
      }
    }
  }
  if (out.empty()) throw error(errc::parse_error, "no checks selected");
  return out;
}

inline simulation_options simulation_of(const run_config& c) {
  if (c.samples == 0) throw error(errc::parse_error, "samples must be at least 1");
  if (c.max_iters < 0) throw error(errc::parse_error, "max_iters must be non-negative");
  simulation_options opt;
  opt.samples = std::size_t(c.samples);
  opt.seed = c.seed;
  opt.max_iters = long(c.max_iters);
  opt.post_entry_steps = int(c.post_entry_steps);
  opt.threads = c.threads;
  return opt;
}

inline std::string guarantee_warning() {
  return "warning: some elliptic A_k lies outside [P_k, Q_k]; attraction is not guaranteed there";
}

inline int cmd_polygon(const run_config& c, io_streams io = {}) {
  auto tol = resolve_tolerances(c);
  auto poly = polygon_of(c);
  auto rep = validate_polygon(poly, tol);
  json j{{"polygon", to_json(poly)}, {"validation", to_json(rep)}};
  emit_json(c, j, io);
  if (!c.svg_path.empty()) {
    auto part = make_partition(poly, partition_mode::midpoint, {}, tol);
    figure_spec fig;
    fig.kind = figure_kind::polygon;
    write_text(c.svg_path, render_polygon(poly, part, fig));
  }
  return rep.passed() ? ok : check_failed;
}

inline json cycle_check(const marked_polygon& poly, const partition& part, const tolerances& tol,
                        bool& passed) {
  json list = json::array();
  for (int k : poly.elliptic_indices()) {
    auto cd = cycle(poly, part, k, tol);
    bool good = cd.matching_residual < tol.geometry && cd.I + cd.J == cd.m - 2;
    passed = passed && good;
    auto e = to_json(cd);
    e["passed"] = good;
    list.push_back(std::move(e));
  }
  return list;
}

inline int cmd_verify(const run_config& c, io_streams io = {}) {
  auto tol = resolve_tolerances(c);
  auto checks = resolve_checks(c.checks);
  auto poly = polygon_of(c);
  auto part = partition_of(poly, c, tol);
  json warnings = json::array();
  if (!part.in_guarantee_range) {
    warnings.push_back(guarantee_warning());
    io.err << guarantee_warning() << "\n";
  }
  bool all = true;
  json results = json::object();
  for (const auto& name : checks) {
    bool passed = true;
    json r;
    if (name == "polygon") {
      auto rep = validate_polygon(poly, tol);
      passed = rep.passed();
      r = to_json(rep);
    } else if (name == "cycle") {
      r = {{"vertices", cycle_check(poly, part, tol, passed)}};
      r["passed"] = passed;
    } else if (name == "markov") {
      if (part.mode == partition_mode::custom) {
        r = {{"passed", true}, {"skipped", "Markov property is only asserted for left, right and midpoint"}};
      } else {
        auto rep = markov_check(poly, part, int(c.max_steps), tol);
        passed = rep.passed();
        r = to_json(rep);
      }
    } else if (name == "bijectivity") {
      auto dom = build_attractor(poly, part, true, tol);
      auto rep = verify_bijectivity(poly, part, dom, tol);
      passed = rep.passed();
      r = to_json(rep);
      r["rects"] = dom.rects.size();
    } else if (name == "attraction") {
      auto dom = build_attractor(poly, part, true, tol);
      auto s = summarize(simulate_entry(poly, part, dom, simulation_of(c), tol));
      passed = s.entered == s.samples && s.exits_after_entry == 0;
      r = to_json(s);
      r["passed"] = passed;
    }
    all = all && passed;
    results[name] = std::move(r);
  }
  json j{{"signature", poly.sig.to_string()},
         {"partition", to_json(part)},
         {"warnings", warnings},
         {"checks", results},
         {"passed", all}};
  emit_json(c, j, io);
  return all ? ok : check_failed;
}

inline int cmd_simulate(const run_config& c, io_streams io = {}) {
  auto tol = resolve_tolerances(c);
  auto opt = simulation_of(c);
  auto poly = polygon_of(c);
  auto part = partition_of(poly, c, tol);
  if (!part.in_guarantee_range) io.err << guarantee_warning() << "\n";
  auto dom = build_attractor(poly, part, true, tol);
  auto traces = simulate_entry(poly, part, dom, opt, tol);
  auto s = summarize(traces);
  if (c.csv_path.empty()) {
    write_csv(io.out, traces);
  } else {
    std::ofstream f(c.csv_path, std::ios::binary);
    if (!f) throw error(errc::parse_error, "cannot open '" + c.csv_path + "' for writing");
    write_csv(f, traces);
  }
  json j{{"signature", poly.sig.to_string()},
         {"partition", to_json(part)},
         {"mode", c.survey ? "survey" : "strict"},
         {"seed", c.seed},
         {"max_iters", c.max_iters},
         {"summary", to_json(s)}};
  if (!c.json_path.empty()) write_text(c.json_path, j.dump(2) + "\n");
  else if (!c.csv_path.empty()) io.out << j.dump(2) << "\n";
  if (c.survey) return ok;
  if (s.entered != s.samples) {
    io.err << "NoEntryWithinBudget: " << (s.samples - s.entered) << " of " << s.samples
           << " samples did not enter within " << c.max_iters << " iterations\n";
    return check_failed;
  }
  return ok;
}

inline int cmd_cycle(const run_config& c, io_streams io = {}) {
  auto tol = resolve_tolerances(c);
  auto poly = polygon_of(c);
  if (c.vertex < 0 || c.vertex >= poly.N)
    throw error(errc::not_elliptic, "vertex index must lie in 0.." + std::to_string(poly.N - 1));
  auto part = partition_of(poly, c, tol);
  auto cd = cycle(poly, part, c.vertex, tol);
  json j = to_json(cd);
  j["signature"] = poly.sig.to_string();
  j["partition"] = to_string(part.mode);
  j["A"] = part.at(c.vertex).theta();
  emit_json(c, j, io);
  return ok;
}

inline int cmd_attractor(const run_config& c, io_streams io = {}) {
  auto tol = resolve_tolerances(c);
  auto poly = polygon_of(c);
  auto part = partition_of(poly, c, tol);
  if (!part.in_guarantee_range) io.err << guarantee_warning() << "\n";
  auto dom = build_attractor(poly, part, true, tol);
  auto rep = verify_bijectivity(poly, part, dom, tol);
  json j = to_json(poly, part, dom);
  j["bijectivity"] = to_json(rep);
  emit_json(c, j, io);
  figure_spec fig;
  fig.kind = figure_kind::attractor;
  if (!c.svg_path.empty()) write_text(c.svg_path, render_attractor(poly, dom, fig));
  if (!c.image_svg_path.empty())
    write_text(c.image_svg_path, render_attractor(rep.images, fig, "F(Omega) (" + poly.sig.to_string() + ")"));
  return rep.passed() ? ok : check_failed;
}

/// Dispatch on c.command; library errors become exit 2.
inline int run(const run_config& c, io_streams io = {}) {
  try {
    if (c.command == "polygon") return cmd_polygon(c, io);
    if (c.command == "verify") return cmd_verify(c, io);
    if (c.command == "simulate") return cmd_simulate(c, io);
    if (c.command == "cycle") return cmd_cycle(c, io);
    if (c.command == "attractor") return cmd_attractor(c, io);
    throw error(errc::parse_error, "unknown command '" + c.command + "'");
  } catch (const error& e) {
    io.err << e.what() << "\n";
    return config_error;
  }
}

}  // namespace fuchsian::cli
