#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsnet/cli/formats.hpp"
#include "gsnet/noise/noise_model.hpp"

namespace gsnet {

enum class ProtocolChoice { Nqkd, TwoQkd, Both };

std::string to_string(ProtocolChoice p);
ProtocolChoice protocol_choice_from_string(const std::string& s);  // throws ParseError

struct SweepConfig {
  double p_min_mw = 0.0;
  double p_max_mw = 200.0;
  int points = 201;
};

/// Run configuration, read from JSON. Labels are stored 0-based; relative paths are
/// resolved against the config file's directory.
struct RunConfig {
  std::filesystem::path graph;
  /// Optional per-vertex frame names: the network holds prod_v C_v |G>.
  std::vector<std::string> network_frame;
  int alice = -1;
  std::vector<int> bobs;
  std::vector<int> nonparticipants;  // empty means every other vertex
  ProtocolChoice protocol = ProtocolChoice::Both;
  std::uint64_t rounds = 100000;
  double type2_fraction = 0.5;
  double disclosed_fraction = 1.0;
  std::optional<std::uint64_t> seed;
  NoiseModel noise;
  /// Explicit 2QKD schedule, one pair list per copy; searched when empty.
  std::vector<std::vector<std::pair<int, int>>> schedule;
  bool loss_tolerant = false;
  std::size_t orbit_cap = 2'000'000;  // LC-orbit members explored by the plan search
  std::uint64_t mc_samples = 1000;
  std::optional<std::uint64_t> mc_seed;  // defaults to seed
  SweepConfig sweep;
  std::filesystem::path output = "out";

  std::vector<int> participants() const;  // alice and bobs, sorted
};

/// Throws ParseError for malformed JSON or unknown keys, InvalidArgument for values out of range.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Field-for-field echo; the output directory and absolute paths are left out so that
/// reports do not depend on where a run was written.
Json config_echo(const RunConfig& c);

/// Checks roles against the graph: labels in range, disjoint, at least two participants
/// and nonparticipants equal to the remaining vertices when given.
void validate_roles(const RunConfig& c, const Graph& g);

}  // namespace gsnet
