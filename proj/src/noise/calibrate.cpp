#include "gsnet/noise/calibrate.hpp"

#include <Eigen/QR>
#include <cmath>

#include "gsnet/core/errors.hpp"

namespace gsnet {

Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  if (a.rows() != b.size()) throw InvalidArgument("nnls dimension mismatch");
  const Eigen::Index n = a.cols();
  const double tol = 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()) * std::max(1.0, b.cwiseAbs().maxCoeff());
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);

  // Unconstrained solution on the passive set, zero elsewhere.
  auto solve_passive = [&] {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < n; ++j)
      if (passive[j]) idx.push_back(j);
    Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
    const Eigen::VectorXd sp = ap.completeOrthogonalDecomposition().solve(b);
    Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < idx.size(); ++k) s(idx[k]) = sp(static_cast<Eigen::Index>(k));
    return s;
  };

  for (Eigen::Index iter = 0; iter < 3 * n + 10; ++iter) {
    const Eigen::VectorXd w = a.transpose() * (b - a * x);
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!passive[j] && w(j) > tol && (enter < 0 || w(j) > w(enter) + tol)) enter = j;
    if (enter < 0) break;
    passive[enter] = true;
    Eigen::VectorXd s = solve_passive();
    for (;;) {
      double alpha = 2.0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[j] && s(j) <= tol) alpha = std::min(alpha, x(j) / (x(j) - s(j)));
      if (alpha > 1.0) break;
      x += alpha * (s - x);
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[j] && x(j) <= tol) {
          passive[j] = false;
          x(j) = 0.0;
        }
      s = solve_passive();
    }
    x = s;
  }
  return x;
}

CalibrationResult calibrate_to_targets(const std::vector<CalibrationTarget>& targets, double tolerance) {
  if (targets.empty()) throw InvalidArgument("no calibration targets");
  const int size = targets.front().plan.network_size;
  struct Row {
    std::vector<int> support;
    double y;
  };
  std::vector<Row> rows;
  auto add = [&](const ExtractionPlan& p, RoundType t, std::vector<int> positions, double q) {
    rows.push_back({parity_support(p, t, positions), -std::log1p(-2.0 * q)});
  };
  for (const CalibrationTarget& t : targets) {
    if (t.plan.network_size != size) throw InvalidArgument("targets use plans on different networks");
    for (double q : {t.qber, t.qx})
      if (!(q >= 0.0 && q < 0.5)) throw InvalidArgument("target error rates must lie in [0, 0.5)");
    const int n = static_cast<int>(t.plan.participants.size());
    if (t.plan.kind == ResourceKind::Ghz) {
      for (int b = 1; b < n; ++b) add(t.plan, RoundType::Type1, {0, b}, t.qber);
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) all[k] = k;
      add(t.plan, RoundType::Type2, all, t.qx);
    } else {
      if (!t.pair) throw InvalidArgument("a multicast target must name its pair");
      const int i = t.plan.participant_index(t.pair->first);
      const int j = t.plan.participant_index(t.pair->second);
      if (i < 0 || j < 0) throw InvalidArgument("target pair is not part of the plan");
      add(t.plan, RoundType::Type1, {i, j}, t.qber);
      add(t.plan, RoundType::Type2, {i, j}, t.qx);
    }
  }

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), size);
  Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int v : rows[r].support) a(static_cast<Eigen::Index>(r), v) = 1.0;
    b(static_cast<Eigen::Index>(r)) = rows[r].y;
  }
  const Eigen::VectorXd x = nnls(a, b);

  CalibrationResult out;
  out.model.depolarizing.assign(static_cast<std::size_t>(size), 0.0);
  for (int v = 0; v < size; ++v) out.model.depolarizing[v] = x(v) > 0.0 ? -std::expm1(-x(v)) : 0.0;
  for (const CalibrationTarget& t : targets) {
    if (t.plan.kind == ResourceKind::Ghz) {
      const ErrorEstimates e = analytic_ghz_estimates(t.plan, out.model);
      out.residual = std::max({out.residual, std::abs(e.qber - t.qber), std::abs(e.qx - t.qx)});
    } else {
      const PairEstimate e = analytic_pair_estimate(t.plan, *t.pair, out.model);
      out.residual = std::max({out.residual, std::abs(e.qber - t.qber), std::abs(e.qx - t.qx)});
    }
  }
  out.feasible = out.residual <= tolerance;
  return out;
}

}  // namespace gsnet
