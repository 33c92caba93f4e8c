#include <doctest.h>

#include <map>
#include <random>

#include "gsnet/core/errors.hpp"
#include "gsnet/qcka/estimators.hpp"

using namespace gsnet;

namespace {

RoundBatch batch(RoundType t, std::vector<int> participants, const std::map<std::string, std::uint64_t>& rows) {
  RoundSetting s;
  s.type = t;
  RoundBatch b(s, std::move(participants));
  for (const auto& [bits, c] : rows) b.counts[parse_outcome(bits)] = c;
  return b;
}

// Disagreement fraction straight from the bit strings.
double disagreement(const RoundBatch& b, int i, int j) {
  double bad = 0, tot = 0;
  for (std::uint64_t o = 0; o < b.counts.size(); ++o) {
    const std::string s = outcome_string(o, b.size());
    tot += static_cast<double>(b.counts[o]);
    if (s[static_cast<std::size_t>(i)] != s[static_cast<std::size_t>(j)]) bad += static_cast<double>(b.counts[o]);
  }
  return bad / tot;
}

}  // namespace

TEST_CASE("outcome strings put participant 0 first") {
  CHECK(outcome_string(0b1000, 4) == "1000");
  CHECK(parse_outcome("0110") == 6);
  CHECK_THROWS_AS(parse_outcome("01a"), ParseError);
  const auto b = batch(RoundType::Type1, {3, 7}, {{"10", 1}});
  CHECK(b.bit(parse_outcome("10"), 0) == 1);
  CHECK(b.bit(parse_outcome("10"), 1) == 0);
}

TEST_CASE("pairwise error examples") {
  CHECK(pairwise_error(batch(RoundType::Type1, {0, 1, 2, 3}, {{"0000", 50}, {"1111", 50}}), 0, 3) == 0.0);
  CHECK(pairwise_error(batch(RoundType::Type1, {0, 1}, {{"00", 45}, {"11", 45}, {"01", 5}, {"10", 5}}), 0, 1) ==
        doctest::Approx(0.10));
  CHECK(pairwise_error(batch(RoundType::Type1, {0, 1}, {{"01", 100}}), 0, 1) == 1.0);
  CHECK_THROWS_AS(pairwise_error(batch(RoundType::Type1, {0, 1}, {}), 0, 1), InvalidArgument);
  CHECK_THROWS_AS(pairwise_error(batch(RoundType::Type1, {0, 1}, {{"00", 1}}), 1, 1), InvalidArgument);
}

TEST_CASE("phase error examples") {
  CHECK(estimate_qx(batch(RoundType::Type2, {0, 1, 2}, {{"000", 10}, {"011", 20}, {"101", 5}})) == 0.0);
  CHECK(estimate_qx(batch(RoundType::Type2, {0, 1, 2}, {{"110", 90}, {"100", 10}})) == doctest::Approx(0.10));
  RoundBatch u = batch(RoundType::Type2, {0, 1, 2, 3}, {});
  for (auto& c : u.counts) c = 7;
  CHECK(estimate_qx(u) == doctest::Approx(0.5));
  CHECK(parity_expectation(u) == doctest::Approx(0.0));
  // A sub-parity over two positions.
  CHECK(estimate_qx(batch(RoundType::Type2, {0, 1, 2}, {{"110", 3}, {"011", 1}}), {0, 1}) == doctest::Approx(0.25));
}

TEST_CASE("Alice choice") {
  const auto sym = estimate_qber(batch(RoundType::Type1, {2, 5, 8}, {{"000", 80}, {"111", 20}}));
  CHECK(sym.alice_choice == 2);
  CHECK(sym.qber == 0.0);

  // Participant at position 2 flips one time in five; every Alice sees a worst case of 0.2.
  const auto noisy =
      estimate_qber(batch(RoundType::Type1, {1, 2, 3, 4}, {{"0000", 40}, {"1111", 40}, {"0010", 10}, {"1101", 10}}));
  CHECK(noisy.qber == doctest::Approx(0.2));
  CHECK(noisy.alice_choice == 1);

  const auto two = estimate_qber(batch(RoundType::Type1, {4, 9}, {{"00", 7}, {"01", 3}}));
  CHECK(two.qber == doctest::Approx(0.3));
  CHECK(qber_for_alice(two, {4, 9}, 9) == doctest::Approx(0.3));
  CHECK_THROWS_AS(qber_for_alice(two, {4, 9}, 5), InvalidArgument);
  CHECK_THROWS_AS(estimate_qber(batch(RoundType::Type1, {4}, {{"0", 1}})), InvalidArgument);
}

TEST_CASE("Alice choice minimises the worst pairwise error over random batches") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> count(0, 40);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> parts(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) parts[static_cast<std::size_t>(k)] = 2 * k + 1;
      RoundSetting s;
      RoundBatch b(s, parts);
      for (auto& c : b.counts) c = static_cast<std::uint64_t>(count(rng));
      b.counts[0] += 1;
      const auto est = estimate_qber(b);
      double best = 2.0;
      int best_label = -1;
      for (int a = 0; a < n; ++a) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j)
          if (j != a) {
            const double d = disagreement(b, a, j);
            CHECK(est.pairwise_q[a][j] == doctest::Approx(d).epsilon(1e-14));
            worst = std::max(worst, d);
          }
        CHECK(est.qber <= qber_for_alice(est, parts, parts[static_cast<std::size_t>(a)]) + 1e-15);
        if (worst < best - 1e-15) {
          best = worst;
          best_label = parts[static_cast<std::size_t>(a)];
        }
      }
      CHECK(est.qber == doctest::Approx(best).epsilon(1e-14));
      CHECK(est.alice_choice == best_label);
    }
}
