#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gsnet/cli/config.hpp"
#include "gsnet/noise/analytic.hpp"

namespace gsnet {

inline constexpr const char* kToolVersion = "1.0.0";

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Network state of the config: the graph state with network_frame applied.
GraphState load_network(const RunConfig& c);

/// Plans the config asks for. Throws NoPlanError when a resource is unreachable.
ProtocolPlans build_plans(const RunConfig& c, const GraphState& network);

struct OrbitListing {
  std::vector<Graph> members;
};
/// Throws CapExceeded above 12 vertices or `cap` members.
OrbitListing cmd_orbit(const std::filesystem::path& graph, std::size_t cap);
std::string format_orbit(const OrbitListing& o);

struct CommandOutput {
  std::vector<std::filesystem::path> files;
  std::string summary;  // human-readable, also written to disk by some commands
};

/// Writes plan_nqkd.json and/or plan_2qkd.json plus plan_summary.txt.
CommandOutput cmd_extract(const RunConfig& c);

/// Name of the counts file for resource `resource` and round type `type`.
std::string counts_file_name(const std::string& resource, RoundType type);

/// Writes one counts file per resource and round type. Resource i (GHZ first, then
/// the pairwise copies) is simulated with seed + i. Throws InvalidArgument without a seed.
CommandOutput cmd_simulate(const RunConfig& c);

/// Analyzes counts files (the simulate outputs in the output directory when `counts`
/// is empty) into report.json. `config_path` is hashed into the provenance when given.
/// Throws MissingSettingError when a required resource or round type has no counts.
Json cmd_analyze(const RunConfig& c, const std::vector<std::filesystem::path>& counts,
                 const std::optional<std::filesystem::path>& config_path = std::nullopt);

/// Writes sweep_<protocol>.csv per protocol and sweep_summary.json.
Json cmd_sweep(const RunConfig& c);

}  // namespace gsnet
