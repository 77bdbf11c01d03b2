#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

using namespace fuchsian;
using namespace fuchsian::cli;

namespace {

void add_common(CLI::App* sub, run_config& c, std::vector<std::string>& tol_overrides) {
  sub->add_option("-s,--signature", c.signature, "signature g;m1,...,mr;t");
  sub->add_option("--json", c.json_path, "write JSON here instead of stdout");
  sub->add_option("--tolerance-profile", c.tolerance_profile, "default|strict|loose");
  sub->add_option("--tolerance", tol_overrides, "override one tolerance, name=value");
}

void add_partition(CLI::App* sub, run_config& c) {
  sub->add_option("-p,--partition", c.partition, "left|right|midpoint|custom=t1,t2,...")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  run_config c;
  std::vector<std::string> tol_overrides;
  std::string config_path, dump_path;

  CLI::App app{"Canonical polygons, boundary maps and attractors of Fuchsian groups with a cusp"};
  app.require_subcommand(1);
  app.add_option("--config", config_path, "read a run config (JSON) before applying flags");
  app.add_option("--dump-config", dump_path, "write the effective run config (JSON) and continue");

  auto* polygon = app.add_subcommand("polygon", "build and validate the canonical polygon");
  add_common(polygon, c, tol_overrides);
  polygon->add_option("--svg", c.svg_path, "polygon figure");

  auto* verify = app.add_subcommand("verify", "run structural checks");
  add_common(verify, c, tol_overrides);
  add_partition(verify, c);
  verify->add_option("--checks", c.checks, "all or a comma list of polygon,cycle,markov,bijectivity,attraction")
      ->delimiter(',');
  verify->add_option("--max-steps", c.max_steps, "orbit budget for the Markov check")->capture_default_str();
  verify->add_option("--samples", c.samples, "samples for the attraction check")->capture_default_str();
  verify->add_option("--seed", c.seed)->capture_default_str();
  verify->add_option("--max-iters", c.max_iters)->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo entry times into Omega");
  add_common(simulate, c, tol_overrides);
  add_partition(simulate, c);
  simulate->add_option("--samples", c.samples)->capture_default_str();
  simulate->add_option("--seed", c.seed)->capture_default_str();
  simulate->add_option("--max-iters", c.max_iters)->capture_default_str();
  simulate->add_option("--post-entry-steps", c.post_entry_steps)->capture_default_str();
  simulate->add_option("--threads", c.threads, "0 uses every core")->capture_default_str();
  simulate->add_flag("--survey", c.survey, "statistics only, always exit 0");
  simulate->add_option("--csv", c.csv_path, "write traces here instead of stdout");

  auto* cyc = app.add_subcommand("cycle", "cycle data of one elliptic vertex");
  add_common(cyc, c, tol_overrides);
  add_partition(cyc, c);
  cyc->add_option("-k,--vertex", c.vertex, "vertex index 0..N-1")->required();

  auto* attractor = app.add_subcommand("attractor", "rectangles of Omega and the bijectivity check");
  add_common(attractor, c, tol_overrides);
  add_partition(attractor, c);
  attractor->add_option("--svg", c.svg_path, "figure of Omega");
  attractor->add_option("--image-svg", c.image_svg_path, "figure of F(Omega)");

  // Flags are parsed twice: once to find --config, then over the loaded config so that explicit
  // flags win.
  try {
    app.parse(argc, argv);
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw error(errc::parse_error, "cannot read config '" + config_path + "'");
      json j;
      try {
        j = json::parse(f);
      } catch (const json::exception& e) {
        throw error(errc::parse_error, std::string("config: ") + e.what());
      }
      c = run_config_from_json(j);
      tol_overrides.clear();
      app.parse(argc, argv);
    }
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : config_error;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return config_error;
  }

  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  try {
    for (const auto& t : tol_overrides) {
      auto [name, value] = parse_tolerance_override(t);
      c.tolerance_overrides[name] = value;
    }
    if (!dump_path.empty()) write_text(dump_path, to_json(c).dump(2) + "\n");
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return config_error;
  }
  return run(c);
}
