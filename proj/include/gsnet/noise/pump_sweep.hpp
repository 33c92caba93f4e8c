#pragma once

#include <vector>

#include "gsnet/noise/analytic.hpp"
#include "gsnet/router/schedule.hpp"

namespace gsnet {

struct SweepPoint {
  double p_mw = 0.0;
  double akr = 0.0;
  double rate_hz = 0.0;
  double keyrate_hz = 0.0;  // max(0, akr) * rate_hz
};

struct PumpSweepResult {
  std::vector<SweepPoint> grid;
  double argmax_p = 0.0;  // first grid point with the largest key rate
};

/// Evaluates the protocol's analytic key rate along the pump-power grid. At power p
/// the model's white noise w0 is combined with the pump contamination w(p) as
/// 1 - (1 - w0)(1 - w(p)). Throws InvalidArgument for an empty, negative or
/// non-increasing grid, and when `plans` lacks the protocol's plans.
PumpSweepResult pump_sweep(const NoiseModel& model, const std::vector<double>& grid_mw, const ProtocolPlans& plans,
                           Protocol protocol);

/// Evenly spaced grid from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, int points);

}  // namespace gsnet
