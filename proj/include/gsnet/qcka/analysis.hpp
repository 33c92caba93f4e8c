#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsnet/qcka/estimators.hpp"
#include "gsnet/qcka/key_rate.hpp"
#include "gsnet/router/plan.hpp"

namespace gsnet {

/// Counts of one extracted resource: its plan and both round types.
struct ResourceData {
  ExtractionPlan plan;
  RoundBatch type1;
  RoundBatch type2;
};

/// Everything a report is computed from. `pairwise` holds one entry per network copy.
struct ProtocolData {
  std::optional<ResourceData> ghz;
  std::vector<ResourceData> pairwise;
};

struct PairEstimate {
  Link link;
  int copy = 0;
  double qber = 0.0;
  double qx = 0.0;
  double rate = 0.0;  // 1 - H(qber) - H(qx), unclamped
};

struct KeyRateReport {
  std::optional<ErrorEstimates> ghz;
  std::optional<double> akr_n;
  std::vector<PairEstimate> pairwise;
  std::optional<double> akr_2;
  bool dead_link = false;
  std::optional<double> ratio;  // akr_n / akr_2, both protocols present and akr_2 > 0
  std::optional<int> copies_nqkd;
  std::optional<int> copies_2qkd;
  std::optional<double> secure_akr_n;
  std::optional<double> secure_akr_2;
  /// Monte Carlo standard deviations keyed by statistic name.
  std::map<std::string, double> uncertainties;
};

/// Report from already computed estimates: key rates, copies, conference rate and
/// ratio. ghz_estimates must be set exactly when ghz is; pair_estimates lists the
/// pairs of every plan in order with qber and qx filled. Throws InvalidArgument when
/// GHZ and pairwise plans involve different participants.
KeyRateReport assemble_report(const ExtractionPlan* ghz, std::optional<ErrorEstimates> ghz_estimates,
                              const std::vector<ExtractionPlan>& pairwise, std::vector<PairEstimate> pair_estimates);

/// Point estimates for whatever protocols `data` covers.
///
/// Throws MissingSettingError when a batch does not carry the setting its plan
/// compiles to, InvalidArgument for empty batches and when GHZ and pairwise data
/// involve different participants.
KeyRateReport analyze(const ProtocolData& data);

/// Same, without the setting checks; used on resampled counts.
KeyRateReport analyze_unchecked(const ProtocolData& data);

}  // namespace gsnet
