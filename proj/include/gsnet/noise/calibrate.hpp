#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "gsnet/noise/analytic.hpp"

namespace gsnet {

/// Wanted error rates for one resource: a GHZ plan, or one pair of a multicast plan.
struct CalibrationTarget {
  ExtractionPlan plan;
  std::optional<Link> pair;  // required for multicast plans
  double qber = 0.0;
  double qx = 0.0;
};

struct CalibrationResult {
  NoiseModel model;
  double residual = 0.0;  // largest |analytic - target| over all target rates
  bool feasible = false;  // residual within tolerance
};

/// Nonnegative least squares min |Ax - b| subject to x >= 0 (Lawson and Hanson).
/// Ties when a variable enters the active set go to the lowest index.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

/// Fits per-vertex depolarizing probabilities to the targets.
///
/// Each target rate q fixes a parity expectation 1 - 2q, and the log of that
/// expectation is linear in -log(1 - lambda_v) over the parity support, so the fit is a
/// nonnegative least-squares problem. GHZ QBER targets constrain the pairs of the
/// lowest-label participant with every other participant. Throws InvalidArgument for
/// targets outside [0, 0.5), an empty target list or plans on different network sizes.
CalibrationResult calibrate_to_targets(const std::vector<CalibrationTarget>& targets, double tolerance = 1e-6);

}  // namespace gsnet
