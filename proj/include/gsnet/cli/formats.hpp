#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsnet/core/graph.hpp"
#include "gsnet/noise/monte_carlo.hpp"
#include "gsnet/noise/pump_sweep.hpp"
#include "gsnet/qcka/analysis.hpp"

// File formats. Every user-facing vertex label is 1-based; label L is vertex L - 1.

namespace gsnet {

using Json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path);  // throws Error when unreadable
void write_file(const std::filesystem::path& path, const std::string& text);

/// First meaningful line is the vertex count, then one "u v" edge per line. '#' starts
/// a comment. Throws ParseError with the offending line.
Graph parse_graph(const std::string& text);
Graph parse_graph_file(const std::filesystem::path& path);
std::string serialize_graph(const Graph& g);

/// One measurement setting's counts plus its header metadata.
struct CountsFile {
  std::string resource;
  RoundBatch batch;
  std::uint64_t seed = 0;
  std::uint64_t rounds = 0;  // rounds simulated for the resource, both types

  bool operator==(const CountsFile&) const = default;
};

/// Header lines in this order, then one row per outcome:
///   # gsnet counts file
///   resource <name>
///   round_type <1|2>
///   basis <one letter per vertex slot>
///   participants <labels>
///   seed <s>
///   rounds <r>
///   bits count
std::string serialize_counts(const CountsFile& c);

/// With a plan, the basis must equal the plan's compiled setting for the round type
/// (MissingSettingError otherwise) and the signs are taken from it. Throws ParseError
/// for malformed lines, bitstring length mismatches, negative counts and duplicate rows.
CountsFile parse_counts(const std::string& text, const ExtractionPlan* plan = nullptr);

/// 12 significant digits, the precision of every emitted number.
double round12(double x);
std::string format12(double x);

Json plan_to_json(const ExtractionPlan& p);
ExtractionPlan plan_from_json(const Json& j);

Json report_to_json(const KeyRateReport& r);
KeyRateReport report_from_json(const Json& j);

Json mc_to_json(const MonteCarloResult& r);

/// Columns p_mW, akr, rate_hz, keyrate_hz.
std::string sweep_csv(const PumpSweepResult& s);

}  // namespace gsnet
