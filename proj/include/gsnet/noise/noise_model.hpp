#pragma once

#include <vector>

#include "gsnet/core/graph_state.hpp"
#include "gsnet/noise/density_operator.hpp"
#include "gsnet/qcka/simulate.hpp"

namespace gsnet {

/// Pump-power dependence of the source: sixfold rate c p^3 and an effective white-noise
/// weight kappa p / (1 + kappa p) standing in for higher-order emission.
struct PumpModel {
  static constexpr double kDefaultRateCoefficient = 1e-8;  // events/s per mW^3
  static constexpr double kDefaultContamination = 0.0019;  // per mW

  double rate_coefficient = kDefaultRateCoefficient;
  double contamination = kDefaultContamination;

  double rate(double p_mw) const;
  double white_noise(double p_mw) const;
  bool operator==(const PumpModel&) const = default;
};

/// Per-vertex channels (indexed by vertex slot, missing entries mean 0) applied to the
/// network state, followed by global white noise.
struct NoiseModel {
  std::vector<double> depolarizing;
  std::vector<double> dephasing;
  double white_noise = 0.0;
  PumpModel pump;

  double depolarizing_at(int v) const;
  double dephasing_at(int v) const;
  /// Throws InvalidArgument when a probability is outside [0, 1] or a pump
  /// coefficient is negative.
  void validate() const;
  bool operator==(const NoiseModel&) const = default;
};

/// (1 - w) Channels(|psi><psi|) + w I / 2^n with qubit k carrying the channels of
/// vertices[k] (qubit k itself when vertices is empty). Throws CapExceeded above 8 qubits.
DensityOperator apply_noise(const DenseState& pure, const NoiseModel& model, const std::vector<int>& vertices = {});

/// Outcome model for the noisy network state.
OutcomeModel noisy_state_model(const GraphState& network, const NoiseModel& model);

}  // namespace gsnet
