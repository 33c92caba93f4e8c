#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsnet/router/plan.hpp"

namespace gsnet {

/// Counts over corrected participant outcome strings for one measurement setting.
///
/// counts has 2^N entries; in index i the bit of participant k (k-th entry of
/// `participants`) is bit N-1-k, so participant 0 is the leftmost character of the
/// printed bitstring.
struct RoundBatch {
  RoundSetting setting;
  std::vector<int> participants;
  std::vector<std::uint64_t> counts;

  RoundBatch() = default;
  /// Zero counts. Throws InvalidArgument for fewer than one or more than 16 participants.
  RoundBatch(RoundSetting s, std::vector<int> participants);

  int size() const noexcept { return static_cast<int>(participants.size()); }
  std::uint64_t total() const;
  int bit(std::uint64_t outcome, int k) const { return static_cast<int>((outcome >> (size() - 1 - k)) & 1U); }

  bool operator==(const RoundBatch&) const = default;
};

std::string outcome_string(std::uint64_t outcome, int width);
/// Throws ParseError on characters other than 0/1.
std::uint64_t parse_outcome(const std::string& bits);

/// Fraction of counts where participants i and j (positions) disagree.
/// Throws InvalidArgument for an empty batch or i == j.
double pairwise_error(const RoundBatch& batch, int i, int j);

/// Empirical expectation of the parity (-1)^(sum of bits) over the given positions
/// (all participants when empty).
double parity_expectation(const RoundBatch& batch, const std::vector<int>& positions = {});

struct ErrorEstimates {
  std::vector<std::vector<double>> pairwise_q;  // symmetric, participant positions
  double qber = 0.0;
  double qx = 0.0;
  int alice_choice = -1;  // vertex label
};

/// QBER with Alice chosen to minimise the largest pairwise error to the others;
/// ties go to the lowest label. Fills pairwise_q, qber and alice_choice.
ErrorEstimates estimate_qber(const RoundBatch& type1);

/// QBER with a fixed Alice (vertex label).
double qber_for_alice(const ErrorEstimates& est, const std::vector<int>& participants, int alice);

/// (1 - <X...X>)/2 from type-2 counts, over the given positions (all when empty).
double estimate_qx(const RoundBatch& type2, const std::vector<int>& positions = {});

}  // namespace gsnet
