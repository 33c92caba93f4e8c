#include "gsnet/qcka/estimators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "gsnet/core/errors.hpp"

namespace gsnet {

RoundBatch::RoundBatch(RoundSetting s, std::vector<int> ps)
    : setting(std::move(s)), participants(std::move(ps)) {
  if (participants.empty() || participants.size() > 16)
    throw InvalidArgument("a batch needs 1 to 16 participants");
  counts.assign(std::size_t{1} << participants.size(), 0);
}

std::uint64_t RoundBatch::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::string outcome_string(std::uint64_t outcome, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int k = 0; k < width; ++k)
    if ((outcome >> (width - 1 - k)) & 1U) s[k] = '1';
  return s;
}

std::uint64_t parse_outcome(const std::string& bits) {
  std::uint64_t x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("outcome string must contain only 0 and 1: " + bits);
    x = (x << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return x;
}

double pairwise_error(const RoundBatch& batch, int i, int j) {
  if (i == j) throw InvalidArgument("pairwise error needs two distinct participants");
  if (i < 0 || j < 0 || i >= batch.size() || j >= batch.size())
    throw InvalidArgument("participant position out of range");
  const std::uint64_t total = batch.total();
  if (total == 0) throw InvalidArgument("empty batch");
  std::uint64_t differ = 0;
  for (std::uint64_t o = 0; o < batch.counts.size(); ++o)
    if (batch.bit(o, i) != batch.bit(o, j)) differ += batch.counts[o];
  return static_cast<double>(differ) / static_cast<double>(total);
}

double parity_expectation(const RoundBatch& batch, const std::vector<int>& positions) {
  const std::uint64_t total = batch.total();
  if (total == 0) throw InvalidArgument("empty batch");
  std::uint64_t mask = 0;
  if (positions.empty()) {
    mask = batch.counts.size() - 1;
  } else {
    for (int k : positions) {
      if (k < 0 || k >= batch.size()) throw InvalidArgument("participant position out of range");
      mask |= std::uint64_t{1} << (batch.size() - 1 - k);
    }
  }
  std::int64_t even = 0;
  std::int64_t odd = 0;
  for (std::uint64_t o = 0; o < batch.counts.size(); ++o) {
    if (std::popcount(o & mask) & 1) odd += static_cast<std::int64_t>(batch.counts[o]);
    else even += static_cast<std::int64_t>(batch.counts[o]);
  }
  return static_cast<double>(even - odd) / static_cast<double>(total);
}

ErrorEstimates estimate_qber(const RoundBatch& type1) {
  const int n = type1.size();
  if (n < 2) throw InvalidArgument("QBER needs at least two participants");
  if (type1.total() == 0) throw InvalidArgument("empty batch");
  ErrorEstimates est;
  est.pairwise_q.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) est.pairwise_q[i][j] = est.pairwise_q[j][i] = pairwise_error(type1, i, j);
  // Positions are in increasing label order when participants are sorted; compare
  // labels explicitly so the tie-break holds for any order.
  double best = 2.0;
  for (int a = 0; a < n; ++a) {
    double worst = 0.0;
    for (int b = 0; b < n; ++b)
      if (b != a) worst = std::max(worst, est.pairwise_q[a][b]);
    if (worst < best || (worst == best && type1.participants[a] < est.alice_choice)) {
      best = worst;
      est.alice_choice = type1.participants[a];
    }
  }
  est.qber = best;
  return est;
}

double qber_for_alice(const ErrorEstimates& est, const std::vector<int>& participants, int alice) {
  const auto it = std::find(participants.begin(), participants.end(), alice);
  if (it == participants.end()) throw InvalidArgument("Alice is not a participant");
  const auto a = static_cast<std::size_t>(it - participants.begin());
  double worst = 0.0;
  for (std::size_t b = 0; b < participants.size(); ++b)
    if (b != a) worst = std::max(worst, est.pairwise_q[a][b]);
  return worst;
}

double estimate_qx(const RoundBatch& type2, const std::vector<int>& positions) {
  return (1.0 - parity_expectation(type2, positions)) / 2.0;
}

}  // namespace gsnet
