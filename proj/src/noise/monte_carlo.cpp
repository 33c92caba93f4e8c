#include "gsnet/noise/monte_carlo.hpp"

#include <cmath>
#include <random>

#include "gsnet/core/errors.hpp"

namespace gsnet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void resample(RoundBatch& b, std::mt19937_64& rng) {
  for (std::uint64_t& c : b.counts) {
    if (c == 0) continue;
    std::poisson_distribution<std::uint64_t> d(static_cast<double>(c));
    c = d(rng);
  }
}

struct Welford {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
};

}  // namespace

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::Qber: return "qber";
    case Statistic::Qx: return "qx";
    case Statistic::AkrN: return "akr_n";
    case Statistic::Akr2: return "akr_2";
    case Statistic::Ratio: return "ratio";
  }
  return "?";
}

Statistic statistic_from_string(const std::string& name) {
  for (Statistic s : all_statistics())
    if (to_string(s) == name) return s;
  throw ParseError("unknown statistic '" + name + "'");
}

const std::vector<Statistic>& all_statistics() {
  static const std::vector<Statistic> all{Statistic::Qber, Statistic::Qx, Statistic::AkrN, Statistic::Akr2,
                                          Statistic::Ratio};
  return all;
}

std::optional<double> statistic_value(const KeyRateReport& r, Statistic s) {
  switch (s) {
    case Statistic::Qber: return r.ghz ? std::optional<double>(r.ghz->qber) : std::nullopt;
    case Statistic::Qx: return r.ghz ? std::optional<double>(r.ghz->qx) : std::nullopt;
    case Statistic::AkrN: return r.akr_n;
    case Statistic::Akr2:
      if (!r.akr_2 || r.dead_link) return std::nullopt;
      return r.akr_2;
    case Statistic::Ratio: return r.ratio;
  }
  return std::nullopt;
}

std::map<Statistic, MonteCarloResult> poisson_mc(const ProtocolData& data, const std::vector<Statistic>& statistics,
                                                 std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples < 100) throw InvalidArgument("Monte Carlo needs at least 100 samples");
  const KeyRateReport point = analyze_unchecked(data);
  std::map<Statistic, MonteCarloResult> out;
  std::map<Statistic, Welford> acc;
  for (Statistic s : statistics) {
    const auto v = statistic_value(point, s);
    if (!v) throw Error("statistic " + to_string(s) + " is undefined on the data");
    MonteCarloResult& r = out[s];
    r.point_estimate = *v;
    r.seed = seed;
    acc[s];
  }

  for (std::uint64_t k = 0; k < n_samples; ++k) {
    std::mt19937_64 rng(splitmix64(splitmix64(seed) ^ k));
    ProtocolData sample = data;
    if (sample.ghz) {
      resample(sample.ghz->type1, rng);
      resample(sample.ghz->type2, rng);
    }
    for (ResourceData& r : sample.pairwise) {
      resample(r.type1, rng);
      resample(r.type2, rng);
    }
    std::optional<KeyRateReport> rep;
    try {
      rep = analyze_unchecked(sample);
    } catch (const InvalidArgument&) {
      // an emptied batch leaves every statistic undefined
    }
    for (Statistic s : statistics) {
      const auto v = rep ? statistic_value(*rep, s) : std::nullopt;
      if (v && std::isfinite(*v)) acc[s].add(*v);
      else ++out[s].rejected;
    }
  }

  for (Statistic s : statistics) {
    const Welford& w = acc[s];
    if (w.n < 2) throw Error("too few Monte Carlo resamples define " + to_string(s));
    MonteCarloResult& r = out[s];
    r.n_samples = w.n;
    r.mean = w.mean;
    r.std = std::sqrt(w.m2 / static_cast<double>(w.n - 1));
  }
  return out;
}

MonteCarloResult poisson_mc(const ProtocolData& data, Statistic statistic, std::uint64_t n_samples,
                            std::uint64_t seed) {
  return poisson_mc(data, std::vector<Statistic>{statistic}, n_samples, seed).at(statistic);
}

void attach_uncertainties(KeyRateReport& report, const ProtocolData& data, std::uint64_t n_samples,
                          std::uint64_t seed) {
  std::vector<Statistic> wanted;
  for (Statistic s : all_statistics())
    if (statistic_value(report, s)) wanted.push_back(s);
  if (wanted.empty()) return;
  for (const auto& [s, r] : poisson_mc(data, wanted, n_samples, seed)) report.uncertainties[to_string(s)] = r.std;
}

}  // namespace gsnet
