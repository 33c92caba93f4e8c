#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsnet/cli/commands.hpp"
#include "gsnet/core/errors.hpp"

namespace {

// Exit codes, stable across releases.
enum Exit { kOk = 0, kUsage = 1, kParse = 2, kNoPlan = 3, kMissingSetting = 4, kCap = 5 };

struct Common {
  std::string config;
  std::string graph;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string protocol;
  std::optional<std::uint64_t> rounds;
  std::optional<std::size_t> cap;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "run configuration (JSON)")->required();
  sub->add_option("--graph", c.graph, "graph file, overrides the config");
  sub->add_option("--seed", c.seed, "random seed, overrides the config");
  sub->add_option("--out", c.out, "output directory, overrides the config");
  sub->add_option("--protocol", c.protocol, "nqkd, 2qkd or both")->check(CLI::IsMember({"nqkd", "2qkd", "both"}));
  sub->add_option("--rounds", c.rounds, "rounds per resource");
  sub->add_option("--cap", c.cap, "LC-orbit members explored by the plan search");
}

gsnet::RunConfig resolve(const Common& c) {
  gsnet::RunConfig rc = gsnet::load_config(c.config);
  if (!c.graph.empty()) rc.graph = c.graph;
  if (c.seed) rc.seed = c.seed;
  if (!c.out.empty()) rc.output = c.out;
  if (!c.protocol.empty()) rc.protocol = gsnet::protocol_choice_from_string(c.protocol);
  if (c.rounds) rc.rounds = *c.rounds;
  if (c.cap) rc.orbit_cap = *c.cap;
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-state network simulator and conference-key analyzer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gsnet::kToolVersion);

  std::string orbit_graph;
  std::size_t orbit_cap = gsnet::LcOrbit::kDefaultMaxMembers;
  auto* orbit = app.add_subcommand("orbit", "list the LC orbit of a graph");
  orbit->add_option("--graph", orbit_graph, "graph file")->required();
  orbit->add_option("--cap", orbit_cap, "maximum orbit size");

  Common common;
  auto* extract = app.add_subcommand("extract", "search extraction plans");
  auto* simulate = app.add_subcommand("simulate", "simulate protocol rounds into counts files");
  auto* analyze = app.add_subcommand("analyze", "turn counts files into a key-rate report");
  auto* sweep = app.add_subcommand("sweep", "pump-power sweep");
  for (auto* s : {extract, simulate, analyze, sweep}) add_common(s, common);
  std::vector<std::string> counts;
  analyze->add_option("counts", counts, "counts files (default: the simulate outputs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (orbit->parsed()) {
      std::cout << gsnet::format_orbit(gsnet::cmd_orbit(orbit_graph, orbit_cap));
      return kOk;
    }
    const gsnet::RunConfig rc = resolve(common);
    if (extract->parsed()) {
      std::cout << gsnet::cmd_extract(rc).summary;
    } else if (simulate->parsed()) {
      const auto out = gsnet::cmd_simulate(rc);
      std::cout << out.summary;
      for (const auto& f : out.files) std::cout << "wrote " << f.string() << "\n";
    } else if (analyze->parsed()) {
      std::vector<std::filesystem::path> paths(counts.begin(), counts.end());
      std::cout << gsnet::cmd_analyze(rc, paths, std::filesystem::path(common.config)).at("report").dump(2) << "\n";
    } else if (sweep->parsed()) {
      std::cout << gsnet::cmd_sweep(rc).dump(2) << "\n";
    }
    return kOk;
  } catch (const gsnet::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const gsnet::NoPlanError& e) {
    std::cerr << "no plan: " << e.what() << "\n";
    return kNoPlan;
  } catch (const gsnet::MissingSettingError& e) {
    std::cerr << "missing setting: " << e.what() << "\n";
    return kMissingSetting;
  } catch (const gsnet::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
