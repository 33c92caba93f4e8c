#include "gsnet/qcka/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gsnet/core/errors.hpp"

namespace gsnet {

OutcomeModel pure_state_model(const GraphState& network) {
  const DenseState psi = to_dense(network);
  return [psi](std::span<const Pauli> bases) { return outcome_distribution(psi, bases); };
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Sampler {
  std::vector<double> cdf;

  explicit Sampler(const std::vector<double>& p) : cdf(p.size()) {
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    const double total = cdf.empty() ? 0.0 : cdf.back();
    if (!(total > 0.0)) throw InvalidArgument("outcome distribution has no mass");
    for (double& c : cdf) c /= total;
    cdf.back() = 1.0;
  }

  std::uint64_t draw(double u) const {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                               static_cast<std::ptrdiff_t>(cdf.size()) - 1));
  }
};

}  // namespace

double keyed_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t lane) {
  const std::uint64_t h = splitmix64(splitmix64(splitmix64(seed) ^ index) ^ (lane * 0xd1b54a32d192ed03ULL));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

RoundBatches simulate_protocol(const ExtractionPlan& plan, const GraphState& network,
                               const OutcomeModel& model, const SimulationOptions& options) {
  if (options.rounds == 0) throw InvalidArgument("need at least one round");
  if (!(options.type2_fraction > 0.0 && options.type2_fraction < 1.0))
    throw InvalidArgument("type2_fraction must lie strictly between 0 and 1");
  if (!(options.disclosed_fraction > 0.0 && options.disclosed_fraction <= 1.0))
    throw InvalidArgument("disclosed_fraction must lie in (0, 1]");
  if (plan.network_size != network.graph.size())
    throw InvalidArgument("plan does not match the network size");
  for (int v : plan.participants)
    if (!network.graph.active(v)) throw InvalidArgument("plan participant missing from network");

  const std::vector<int> active = network.graph.vertices();
  const int n = static_cast<int>(active.size());
  RoundBatches out{RoundBatch(compile_round_settings(plan, RoundType::Type1), plan.participants),
                   RoundBatch(compile_round_settings(plan, RoundType::Type2), plan.participants)};

  auto sampler_for = [&](const RoundSetting& s) {
    std::vector<Pauli> bases;
    for (int v : active) bases.push_back(s.bases[v]);
    return Sampler(model(bases));
  };
  const Sampler s1 = sampler_for(out.type1.setting);
  const Sampler s2 = sampler_for(out.type2.setting);

  std::vector<int> raw(static_cast<std::size_t>(plan.network_size), 0);
  const int width = static_cast<int>(plan.participants.size());
  for (std::uint64_t r = 0; r < options.rounds; ++r) {
    const bool type2 = keyed_uniform(options.seed, r, 0) < options.type2_fraction;
    if (!type2 && options.disclosed_fraction < 1.0 &&
        keyed_uniform(options.seed, r, 2) >= options.disclosed_fraction)
      continue;
    RoundBatch& batch = type2 ? out.type2 : out.type1;
    const std::uint64_t o = (type2 ? s2 : s1).draw(keyed_uniform(options.seed, r, 1));
    for (int k = 0; k < n; ++k) raw[active[k]] = static_cast<int>((o >> (n - 1 - k)) & 1U);
    const std::vector<int> bits = corrected_participant_bits(plan, batch.setting, raw);
    std::uint64_t idx = 0;
    for (int k = 0; k < width; ++k) idx = (idx << 1) | static_cast<std::uint64_t>(bits[k]);
    ++batch.counts[idx];
  }
  return out;
}

}  // namespace gsnet
