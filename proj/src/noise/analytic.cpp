#include "gsnet/noise/analytic.hpp"

#include <algorithm>

#include "gsnet/core/errors.hpp"

namespace gsnet {

std::vector<int> parity_support(const ExtractionPlan& plan, RoundType type, std::vector<int> positions) {
  const Pauli nominal = type == RoundType::Type1 ? Pauli::Z : Pauli::X;
  const int n = static_cast<int>(plan.participants.size());
  if (positions.empty())
    for (int k = 0; k < n; ++k) positions.push_back(k);
  std::vector<int> support;
  for (int k : positions) {
    if (k < 0 || k >= n) throw InvalidArgument("participant position out of range");
    support.push_back(plan.participants[k]);
  }
  for (std::size_t i = 0; i < plan.measured.size(); ++i) {
    int flips = 0;
    for (int k : positions) flips ^= commutes(plan.byproduct_generators[i][k], nominal) ? 0 : 1;
    if (flips) support.push_back(plan.measured[i]);
  }
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw InvalidArgument("repeated participant position");
  return support;
}

namespace {

// Whether the parity is +1 on the ideal resource; otherwise it averages to zero.
bool in_stabilizer(const ExtractionPlan& plan, RoundType type, const std::vector<int>& positions) {
  const int n = static_cast<int>(plan.participants.size());
  std::vector<int> picked(static_cast<std::size_t>(n), 0);
  if (positions.empty()) picked.assign(picked.size(), 1);
  for (int k : positions)
    if (k >= 0 && k < n) picked[k] = 1;
  std::vector<std::vector<int>> groups;
  if (plan.kind == ResourceKind::Ghz) {
    groups.emplace_back();
    for (int k = 0; k < n; ++k) groups.back().push_back(k);
  } else {
    for (const auto& [a, b] : plan.pairs) groups.push_back({plan.participant_index(a), plan.participant_index(b)});
  }
  for (const auto& g : groups) {
    int count = 0;
    for (int k : g) count += picked[k];
    if (type == RoundType::Type1 ? count % 2 != 0 : count != 0 && count != static_cast<int>(g.size())) return false;
  }
  return true;
}

}  // namespace

double analytic_parity(const ExtractionPlan& plan, RoundType type, const std::vector<int>& positions,
                       const NoiseModel& model) {
  model.validate();
  if (!in_stabilizer(plan, type, positions)) {
    parity_support(plan, type, positions);  // still validates the positions
    return 0.0;
  }
  const RoundSetting setting = compile_round_settings(plan, type);
  double e = 1.0 - model.white_noise;
  for (int v : parity_support(plan, type, positions)) {
    e *= 1.0 - model.depolarizing_at(v);
    if (has_x(setting.bases[v])) e *= 1.0 - 2.0 * model.dephasing_at(v);
  }
  return e;
}

ErrorEstimates analytic_ghz_estimates(const ExtractionPlan& plan, const NoiseModel& model) {
  if (plan.kind != ResourceKind::Ghz) throw InvalidArgument("expected a GHZ plan");
  const int n = static_cast<int>(plan.participants.size());
  ErrorEstimates est;
  est.pairwise_q.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      est.pairwise_q[i][j] = est.pairwise_q[j][i] = (1.0 - analytic_parity(plan, RoundType::Type1, {i, j}, model)) / 2;
  double best = 2.0;
  for (int a = 0; a < n; ++a) {
    double worst = 0.0;
    for (int b = 0; b < n; ++b)
      if (b != a) worst = std::max(worst, est.pairwise_q[a][b]);
    if (worst < best) {
      best = worst;
      est.alice_choice = plan.participants[a];
    }
  }
  est.qber = best;
  est.qx = (1.0 - analytic_parity(plan, RoundType::Type2, {}, model)) / 2;
  return est;
}

PairEstimate analytic_pair_estimate(const ExtractionPlan& plan, const Link& pair, const NoiseModel& model) {
  const int i = plan.participant_index(pair.first);
  const int j = plan.participant_index(pair.second);
  if (i < 0 || j < 0) throw InvalidArgument("pair is not part of the plan");
  PairEstimate pe;
  pe.link = pair;
  pe.qber = (1.0 - analytic_parity(plan, RoundType::Type1, {i, j}, model)) / 2;
  pe.qx = (1.0 - analytic_parity(plan, RoundType::Type2, {i, j}, model)) / 2;
  return pe;
}

KeyRateReport analytic_report(const ProtocolPlans& plans, const NoiseModel& model) {
  std::optional<ErrorEstimates> ghz_est;
  if (plans.ghz) ghz_est = analytic_ghz_estimates(*plans.ghz, model);
  std::vector<PairEstimate> pairs;
  for (const ExtractionPlan& p : plans.pairwise)
    for (const Link& l : p.pairs) pairs.push_back(analytic_pair_estimate(p, l, model));
  return assemble_report(plans.ghz ? &*plans.ghz : nullptr, std::move(ghz_est), plans.pairwise, std::move(pairs));
}

}  // namespace gsnet
