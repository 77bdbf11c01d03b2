#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fuchsian/fuchsian.hpp"

namespace fuchsian::cli {

struct partition_spec {
  partition_mode mode = partition_mode::midpoint;
  std::vector<double> angles;
  friend bool operator==(const partition_spec&, const partition_spec&) = default;
};

/// "left" | "right" | "midpoint" | "custom=t1,t2,..."
inline partition_spec parse_partition(const std::string& text) {
  partition_spec p;
  if (text == "left") p.mode = partition_mode::left;
  else if (text == "right") p.mode = partition_mode::right;
  else if (text == "midpoint") p.mode = partition_mode::midpoint;
  else if (text.rfind("custom=", 0) == 0) {
    p.mode = partition_mode::custom;
    std::stringstream ss(text.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size())
        throw error(errc::parse_error, "custom partition angle '" + item + "' is not a number");
      p.angles.push_back(x);
    }
  } else {
    throw error(errc::parse_error, "unknown partition '" + text + "' (left|right|midpoint|custom=...)");
  }
  return p;
}

inline std::string format_partition(const partition_spec& p) {
  if (p.mode != partition_mode::custom) return to_string(p.mode);
  std::string s = "custom=";
  for (std::size_t i = 0; i < p.angles.size(); ++i) s += (i ? "," : "") + format_double(p.angles[i]);
  return s;
}

struct run_config {
  std::string command;
  std::string signature;
  std::string partition = "midpoint";
  std::uint64_t seed = 42;
  std::uint64_t samples = 10000;
  std::int64_t max_iters = 100000;
  std::int64_t max_steps = 10000;
  std::int64_t post_entry_steps = 1000;
  int vertex = -1;
  unsigned threads = 0;
  bool survey = false;
  std::vector<std::string> checks{"all"};
  std::string json_path, svg_path, image_svg_path, csv_path;
  std::string tolerance_profile;
  std::map<std::string, double> tolerance_overrides;

  friend bool operator==(const run_config&, const run_config&) = default;
};

inline json to_json(const run_config& c) {
  json t = json::object();
  for (const auto& [k, v] : c.tolerance_overrides) t[k] = v;
  return {{"command", c.command},
          {"signature", c.signature},
          {"partition", c.partition},
          {"seed", c.seed},
          {"samples", c.samples},
          {"max_iters", c.max_iters},
          {"max_steps", c.max_steps},
          {"post_entry_steps", c.post_entry_steps},
          {"vertex", c.vertex},
          {"threads", c.threads},
          {"survey", c.survey},
          {"checks", c.checks},
          {"outputs", {{"json", c.json_path}, {"svg", c.svg_path}, {"image_svg", c.image_svg_path}, {"csv", c.csv_path}}},
          {"tolerance_profile", c.tolerance_profile},
          {"tolerances", t}};
}

inline run_config run_config_from_json(const json& j) {
  run_config c;
  try {
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) j.at(key).get_to(field);
    };
    get("command", c.command);
    get("signature", c.signature);
    get("partition", c.partition);
    get("seed", c.seed);
    get("samples", c.samples);
    get("max_iters", c.max_iters);
    get("max_steps", c.max_steps);
    get("post_entry_steps", c.post_entry_steps);
    get("vertex", c.vertex);
    get("threads", c.threads);
    get("survey", c.survey);
    get("checks", c.checks);
    if (j.contains("outputs")) {
      const auto& o = j.at("outputs");
      if (o.contains("json")) o.at("json").get_to(c.json_path);
      if (o.contains("svg")) o.at("svg").get_to(c.svg_path);
      if (o.contains("image_svg")) o.at("image_svg").get_to(c.image_svg_path);
      if (o.contains("csv")) o.at("csv").get_to(c.csv_path);
    }
    get("tolerance_profile", c.tolerance_profile);
    if (j.contains("tolerances"))
      for (const auto& [k, v] : j.at("tolerances").items()) c.tolerance_overrides[k] = v.get<double>();
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("run config: ") + e.what());
  }
  return c;
}

inline tolerances resolve_tolerances(const run_config& c) {
  tolerances t = c.tolerance_profile.empty() ? tolerances_from_environment()
                                             : tolerance_profile(c.tolerance_profile);
  std::map<std::string, double*> fields{{"structural", &t.structural}, {"spectral", &t.spectral},
                                        {"geometry", &t.geometry},     {"angle_wrap", &t.angle_wrap},
                                        {"degenerate", &t.degenerate}, {"revisit", &t.revisit},
                                        {"snap", &t.snap},             {"membership", &t.membership},
                                        {"coordinate_merge", &t.coordinate_merge}};
  for (const auto& [name, value] : c.tolerance_overrides) {
    auto it = fields.find(name);
    if (it == fields.end()) throw error(errc::parse_error, "unknown tolerance '" + name + "'");
    if (!(value > 0)) throw error(errc::parse_error, "tolerance '" + name + "' must be positive");
    *it->second = value;
  }
  return t;
}

/// "name=value"
inline std::pair<std::string, double> parse_tolerance_override(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw error(errc::parse_error, "expected name=value, got '" + text + "'");
  try {
    return {text.substr(0, eq), std::stod(text.substr(eq + 1))};
  } catch (const std::exception&) {
    throw error(errc::parse_error, "bad tolerance value in '" + text + "'");
  }
}

}  // namespace fuchsian::cli
