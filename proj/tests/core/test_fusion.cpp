#include <doctest.h>

#include "gsnet/core/fusion_circuit.hpp"
#include "support/oracles.hpp"

using namespace gsnet;

namespace {

// The six-photon output written out term by term (h = 0, v = 1).
oracle::Vec eight_term_state() {
  oracle::Vec v(64, 0.0);
  const double a = 1.0 / std::sqrt(8.0);
  const std::pair<const char*, double> terms[] = {{"hhhhhh", a},  {"hhhhvv", -a}, {"hhvvhh", -a}, {"hhvvvv", -a},
                                                  {"vvhhhh", -a}, {"vvhhvv", a},  {"vvvvhh", -a}, {"vvvvvv", -a}};
  for (const auto& [ket, amp] : terms) {
    std::size_t idx = 0;
    for (const char* c = ket; *c; ++c) idx = idx * 2 + (*c == 'v' ? 1 : 0);
    v[idx] = amp;
  }
  return v;
}

oracle::Vec to_oracle(const DenseState& s) {
  oracle::Vec v(static_cast<std::size_t>(s.amplitudes().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.amplitudes()(static_cast<Eigen::Index>(i));
  return v;
}

}  // namespace

TEST_CASE("six-photon circuit produces the eight-term state exactly") {
  const auto out = six_photon_circuit().run();
  const oracle::Vec got = to_oracle(out.state);
  const oracle::Vec want = eight_term_state();
  for (std::size_t i = 0; i < 64; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
  CHECK(out.success_probability == doctest::Approx(0.125));
}

TEST_CASE("local rotations map the output to the target graph state") {
  oracle::Vec v = to_oracle(six_photon_circuit().run().state);
  for (int q = 0; q < 6; ++q) oracle::apply(v, 6, q, q % 2 == 0 ? oracle::mat_h() : oracle::mat_z());
  const oracle::Vec target = oracle::graph_state(6, {{0, 1}, {1, 3}, {2, 3}, {3, 5}, {4, 5}});
  CHECK(std::abs(oracle::fidelity(v, target) - 1.0) < 1e-10);
}

TEST_CASE("without the sign fix the target is missed") {
  oracle::Vec v = to_oracle(six_photon_circuit(false).run().state);
  for (int q = 0; q < 6; ++q) oracle::apply(v, 6, q, q % 2 == 0 ? oracle::mat_h() : oracle::mat_z());
  const oracle::Vec target = oracle::graph_state(6, {{0, 1}, {1, 3}, {2, 3}, {3, 5}, {4, 5}});
  CHECK(oracle::fidelity(v, target) < 0.99);
}

TEST_CASE("single fusion of two Bell pairs") {
  LinearOpticsCircuit c(4);
  c.bell_pair(0, 1).bell_pair(2, 3).fusion(1, 2);
  const auto out = c.run();
  CHECK(out.success_probability == doctest::Approx(0.5));
  CHECK(c.fusion_count() == 1);
  // Parity projection of two Bell pairs leaves a four-qubit GHZ state.
  oracle::Vec ghz(16, 0.0);
  ghz[0] = ghz[15] = 1.0 / std::sqrt(2.0);
  CHECK(oracle::fidelity(to_oracle(out.state), ghz) == doctest::Approx(1.0));
}
