#include "gsnet/router/plan.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "gsnet/core/errors.hpp"

namespace gsnet {

std::string to_string(ResourceKind k) {
  return k == ResourceKind::Ghz ? "ghz" : "bell_multicast";
}

namespace {

void require_active(const Graph& g, int v) {
  if (!g.active(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
}

std::vector<int> complement_of(const Graph& g, const std::vector<int>& chosen) {
  std::vector<int> out;
  for (int v : g.vertices())
    if (!std::binary_search(chosen.begin(), chosen.end(), v)) out.push_back(v);
  return out;
}

}  // namespace

ExtractionTask ExtractionTask::ghz(const Graph& g, std::vector<int> targets) {
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
    throw InvalidArgument("repeated target vertex");
  if (targets.size() < 2) throw InvalidArgument("a GHZ task needs at least two targets");
  for (int v : targets) require_active(g, v);
  ExtractionTask t;
  t.kind = ResourceKind::Ghz;
  t.participants = targets;
  t.nonparticipants = complement_of(g, t.participants);
  return t;
}

ExtractionTask ExtractionTask::bell_multicast(const Graph& g, std::vector<std::pair<int, int>> pairs) {
  if (pairs.empty()) throw InvalidArgument("a multicast task needs at least one pair");
  std::set<int> used;
  for (auto& [a, b] : pairs) {
    require_active(g, a);
    require_active(g, b);
    if (a == b) throw InvalidArgument("a pair needs two distinct vertices");
    if (a > b) std::swap(a, b);
    if (!used.insert(a).second || !used.insert(b).second)
      throw InvalidArgument("multicast pairs must be disjoint");
  }
  std::sort(pairs.begin(), pairs.end());
  ExtractionTask t;
  t.kind = ResourceKind::BellMulticast;
  t.pairs = std::move(pairs);
  t.participants.assign(used.begin(), used.end());
  t.nonparticipants = complement_of(g, t.participants);
  return t;
}

int ExtractionPlan::participant_index(int v) const {
  const auto it = std::lower_bound(participants.begin(), participants.end(), v);
  if (it == participants.end() || *it != v) return -1;
  return static_cast<int>(it - participants.begin());
}

std::string RoundSetting::basis_string() const {
  std::string s;
  for (Pauli p : bases) s.push_back(to_char(p));
  return s;
}

RoundSetting compile_round_settings(const ExtractionPlan& plan, RoundType type) {
  RoundSetting s;
  s.type = type;
  s.bases.assign(static_cast<std::size_t>(plan.network_size), Pauli::I);
  s.signs.assign(static_cast<std::size_t>(plan.network_size), 1);
  const Pauli nominal = type == RoundType::Type1 ? Pauli::Z : Pauli::X;
  for (std::size_t k = 0; k < plan.participants.size(); ++k) {
    const SignedPauli p = plan.participant_frames[k].image(nominal);
    s.bases[plan.participants[k]] = p.letter;
    s.signs[plan.participants[k]] = p.sign;
  }
  for (std::size_t i = 0; i < plan.measured.size(); ++i) {
    s.bases[plan.measured[i]] = plan.measured_bases[i].letter;
    s.signs[plan.measured[i]] = plan.measured_bases[i].sign;
  }
  return s;
}

std::vector<Pauli> byproduct_paulis(const ExtractionPlan& plan, const std::vector<int>& outcomes) {
  if (outcomes.size() != plan.measured.size())
    throw InvalidArgument("expected " + std::to_string(plan.measured.size()) +
                          " measured-vertex outcomes, got " + std::to_string(outcomes.size()));
  std::vector<Pauli> acc(plan.participants.size(), Pauli::I);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i] == 0) continue;
    for (std::size_t k = 0; k < acc.size(); ++k)
      acc[k] = pauli_product(acc[k], plan.byproduct_generators[i][k]);
  }
  return acc;
}

std::vector<int> byproduct_correction(const ExtractionPlan& plan, const std::vector<int>& outcomes,
                                      RoundType type) {
  const Pauli nominal = type == RoundType::Type1 ? Pauli::Z : Pauli::X;
  const std::vector<Pauli> q = byproduct_paulis(plan, outcomes);
  std::vector<int> mask(q.size(), 0);
  for (std::size_t k = 0; k < q.size(); ++k) mask[k] = commutes(q[k], nominal) ? 0 : 1;
  return mask;
}

std::vector<int> corrected_participant_bits(const ExtractionPlan& plan, const RoundSetting& setting,
                                            const std::vector<int>& raw_bits) {
  if (static_cast<int>(raw_bits.size()) != plan.network_size)
    throw InvalidArgument("raw outcome vector must cover every vertex slot");
  std::vector<int> outcomes;
  outcomes.reserve(plan.measured.size());
  for (int d : plan.measured) outcomes.push_back(raw_bits[d]);
  const std::vector<int> mask = byproduct_correction(plan, outcomes, setting.type);
  std::vector<int> bits(plan.participants.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    const int v = plan.participants[k];
    bits[k] = raw_bits[v] ^ (setting.signs[v] < 0 ? 1 : 0) ^ mask[k];
  }
  return bits;
}

DenseState ideal_resource(const ExtractionPlan& plan) {
  const int k = static_cast<int>(plan.participants.size());
  Amplitudes a = Amplitudes::Zero(Eigen::Index{1} << k);
  if (plan.kind == ResourceKind::Ghz) {
    a(0) = a(a.size() - 1) = 1.0 / std::sqrt(2.0);
    return DenseState(std::move(a));
  }
  const int p = static_cast<int>(plan.pairs.size());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << p); ++x) {
    std::uint64_t idx = 0;
    for (int j = 0; j < p; ++j) {
      if (!((x >> j) & 1U)) continue;
      idx |= std::uint64_t{1} << (k - 1 - plan.participant_index(plan.pairs[j].first));
      idx |= std::uint64_t{1} << (k - 1 - plan.participant_index(plan.pairs[j].second));
    }
    a(static_cast<Eigen::Index>(idx)) = 1.0;
  }
  return DenseState::normalized(std::move(a));
}

double verify_plan(const GraphState& network, const ExtractionPlan& plan) {
  if (network.graph.active_count() > 10)
    throw CapExceeded("plan verification limited to 10 vertices");
  const DenseState full = to_dense(network);
  const std::size_t m = plan.measured.size();
  const double expected_p = std::ldexp(1.0, -static_cast<int>(m));

  // Participant positions after the measured qubits are removed.
  std::vector<int> remaining;
  for (int v : network.graph.vertices())
    if (!std::binary_search(plan.measured.begin(), plan.measured.end(), v)) remaining.push_back(v);
  std::vector<int> keep;
  for (int v : plan.participants)
    keep.push_back(static_cast<int>(std::lower_bound(remaining.begin(), remaining.end(), v) -
                                    remaining.begin()));

  const DenseState resource = ideal_resource(plan);
  double worst = 1.0;
  for (std::uint64_t branch = 0; branch < (std::uint64_t{1} << m); ++branch) {
    std::vector<int> outcomes(m);
    DenseState s = full;
    double prob = 1.0;
    bool attainable = true;
    for (std::size_t i = m; i-- > 0;) {
      outcomes[i] = static_cast<int>((branch >> i) & 1U);
      const auto pr = project_out(s, network.qubit_of(plan.measured[i]),
                                  plan.measured_bases[i].letter, outcomes[i]);
      if (!pr) {
        attainable = false;
        break;
      }
      prob *= pr->probability;
      s = pr->state;
    }
    if (!attainable || std::abs(prob - expected_p) > 1e-9) return 0.0;

    Amplitudes psi = resource.amplitudes();
    const std::vector<Pauli> q = byproduct_paulis(plan, outcomes);
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k] != Pauli::I) dense::apply_1q(psi, static_cast<int>(k), gates::pauli(q[k]));
      dense::apply_1q(psi, static_cast<int>(k), plan.participant_frames[k].matrix());
    }
    const Eigen::MatrixXcd rho = reduced_density_matrix(s, keep);
    const double f = psi.dot(rho * psi).real();
    worst = std::min(worst, f);
  }
  return worst;
}

}  // namespace gsnet
