#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gsnet/core/graph_state.hpp"
#include "gsnet/qcka/estimators.hpp"
#include "gsnet/router/plan.hpp"

namespace gsnet {

/// Joint outcome distribution of the network for one setting. bases has one entry per
/// active vertex in increasing label order (I means unmeasured); the result has
/// 2^(active count) entries indexed with the first active vertex as the most
/// significant bit.
using OutcomeModel = std::function<std::vector<double>(std::span<const Pauli> bases)>;

/// Noiseless model backed by the dense form of the network state.
OutcomeModel pure_state_model(const GraphState& network);

/// Deterministic uniform draw in [0, 1) keyed by (seed, index, lane).
double keyed_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t lane);

struct SimulationOptions {
  std::uint64_t rounds = 10000;
  double type2_fraction = 0.5;
  std::uint64_t seed = 0;
  /// Share of type-1 rounds whose outcomes are disclosed for error estimation.
  double disclosed_fraction = 1.0;
};

struct RoundBatches {
  RoundBatch type1;
  RoundBatch type2;
};

/// Samples protocol rounds of one plan. Round r picks its type and its outcome from
/// draws keyed by (seed, r), so the result does not depend on evaluation order.
/// Counts are byproduct-corrected participant outcomes.
/// Throws InvalidArgument for rounds == 0, a fraction outside (0, 1) or a plan that
/// does not fit the network.
RoundBatches simulate_protocol(const ExtractionPlan& plan, const GraphState& network,
                               const OutcomeModel& model, const SimulationOptions& options);

}  // namespace gsnet
