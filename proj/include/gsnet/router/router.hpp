#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gsnet/core/graph_state.hpp"
#include "gsnet/router/orbit.hpp"
#include "gsnet/router/plan.hpp"

namespace gsnet {

struct PlanOptions {
  /// Allow nonparticipants to be left unmeasured when they are cut off from the
  /// participants after the other measurements.
  bool loss_tolerant = false;
  std::size_t max_orbit = LcOrbit::kDefaultMaxMembers;
  /// Bound on the discard-subset enumeration of the loss-tolerant search.
  int max_nonparticipants = 6;
  /// Dense check of the returned plan (networks with at most 10 vertices).
  bool verify = true;
};

/// Plan search over the labelled LC orbit of a fixed network state.
///
/// Every sequence of Pauli measurements on nonparticipants equals some LC sequence
/// followed by Z measurements, so the search walks the orbit and Z-deletes the
/// nonparticipants of each member. Candidates are ranked by LC count, then (when
/// loss tolerant) by the number of measured vertices, then by the number of measured
/// vertices whose physical basis is not Z, then by the LC sequence.
class Router {
 public:
  explicit Router(GraphState network, PlanOptions options = {});

  const GraphState& network() const noexcept { return network_; }
  const PlanOptions& options() const noexcept { return options_; }
  const LcOrbit& orbit();

  std::optional<ExtractionPlan> find_plan(const ExtractionTask& task);
  std::optional<ExtractionPlan> find_ghz_plan(const std::vector<int>& targets);
  std::optional<ExtractionPlan> find_bell_multicast_plan(const std::vector<std::pair<int, int>>& pairs);

 private:
  GraphState network_;
  PlanOptions options_;
  std::unique_ptr<LcOrbit> orbit_;
};

std::optional<ExtractionPlan> find_ghz_plan(const GraphState& network, const std::vector<int>& targets,
                                            const PlanOptions& options = {});
std::optional<ExtractionPlan> find_ghz_plan(const Graph& g, const std::vector<int>& targets,
                                            const PlanOptions& options = {});
std::optional<ExtractionPlan> find_bell_multicast_plan(const GraphState& network,
                                                       const std::vector<std::pair<int, int>>& pairs,
                                                       const PlanOptions& options = {});
std::optional<ExtractionPlan> find_bell_multicast_plan(const Graph& g,
                                                       const std::vector<std::pair<int, int>>& pairs,
                                                       const PlanOptions& options = {});

/// Builds the plan for a fixed LC sequence and measured/discarded split without any
/// search. Returns nullopt when the residual is not the requested resource.
std::optional<ExtractionPlan> realize_plan(const GraphState& network, const ExtractionTask& task,
                                           const std::vector<int>& lc_sequence,
                                           const std::vector<int>& discarded = {});

/// True when the graph induced on `on` is connected and is a star or a complete graph,
/// the two shapes LC-equivalent to GHZ among labelled graphs.
bool is_ghz_shape(const Graph& g, VertexMask on);

}  // namespace gsnet
