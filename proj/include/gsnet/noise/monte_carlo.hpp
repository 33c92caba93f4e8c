#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsnet/qcka/analysis.hpp"

namespace gsnet {

enum class Statistic { Qber, Qx, AkrN, Akr2, Ratio };

std::string to_string(Statistic s);
/// Throws ParseError for unknown names.
Statistic statistic_from_string(const std::string& name);
const std::vector<Statistic>& all_statistics();

/// The statistic's value in a report, nullopt when the report does not define it.
std::optional<double> statistic_value(const KeyRateReport& report, Statistic s);

struct MonteCarloResult {
  double point_estimate = 0.0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation over accepted resamples
  std::uint64_t n_samples = 0;
  std::uint64_t rejected = 0;
  std::uint64_t seed = 0;

  bool operator==(const MonteCarloResult&) const = default;
};

/// Poisson resampling of every count independently. Resample k draws from a
/// generator seeded by (seed, k) and visits the counts in canonical order, so results
/// do not depend on scheduling. Resamples on which a statistic is undefined are
/// rejected for that statistic. Throws InvalidArgument for n_samples < 100 and Error
/// when a requested statistic is undefined on the data itself or fewer than two
/// resamples survive.
std::map<Statistic, MonteCarloResult> poisson_mc(const ProtocolData& data, const std::vector<Statistic>& statistics,
                                                 std::uint64_t n_samples, std::uint64_t seed);

MonteCarloResult poisson_mc(const ProtocolData& data, Statistic statistic, std::uint64_t n_samples,
                            std::uint64_t seed);

/// Fills report.uncertainties with the std of every statistic the data defines.
void attach_uncertainties(KeyRateReport& report, const ProtocolData& data, std::uint64_t n_samples,
                          std::uint64_t seed);

}  // namespace gsnet
