#pragma once

#include <optional>
#include <vector>

#include "gsnet/noise/noise_model.hpp"
#include "gsnet/qcka/analysis.hpp"

namespace gsnet {

/// Plans of one scenario: a GHZ plan, pairwise plans (one per copy), or both.
struct ProtocolPlans {
  std::optional<ExtractionPlan> ghz;
  std::vector<ExtractionPlan> pairwise;
};

/// Vertices whose channels act on the parity of the corrected bits at `positions`:
/// those participants, plus every measured vertex whose outcome flips that parity.
/// Empty positions mean all participants.
std::vector<int> parity_support(const ExtractionPlan& plan, RoundType type, std::vector<int> positions);

/// Exact expectation of that parity under the noise model. The channels are Pauli
/// diagonal, so every support vertex v scales it by (1 - lambda_v), and additionally by
/// (1 - 2 p_v) when its physical basis is X or Y; white noise scales it by (1 - w).
/// Parities that are not stabilizers of the ideal resource give 0.
double analytic_parity(const ExtractionPlan& plan, RoundType type, const std::vector<int>& positions,
                       const NoiseModel& model);

/// QBER (with the Alice choice) and Q_X of a GHZ plan.
ErrorEstimates analytic_ghz_estimates(const ExtractionPlan& plan, const NoiseModel& model);

/// qber and qx of one pair of a multicast plan.
PairEstimate analytic_pair_estimate(const ExtractionPlan& plan, const Link& pair, const NoiseModel& model);

/// Key-rate report in the infinite-round limit.
KeyRateReport analytic_report(const ProtocolPlans& plans, const NoiseModel& model);

}  // namespace gsnet
