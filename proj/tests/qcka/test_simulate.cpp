#include <doctest.h>

#include <cmath>

#include "gsnet/core/errors.hpp"
#include "gsnet/noise/analytic.hpp"
#include "gsnet/noise/noise_model.hpp"
#include "gsnet/qcka/simulate.hpp"
#include "support/fixtures.hpp"

using namespace gsnet;

namespace {

std::uint64_t mass_outside(const RoundBatch& b, std::initializer_list<const char*> allowed) {
  std::uint64_t out = 0;
  for (std::uint64_t o = 0; o < b.counts.size(); ++o) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || o == parse_outcome(a);
    if (!ok) out += b.counts[o];
  }
  return out;
}

bool within_3_sigma(double est, double p, std::uint64_t n) {
  return std::abs(est - p) <= 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(n)) + 1e-12;
}

}  // namespace

TEST_CASE("keyed draws") {
  CHECK(keyed_uniform(1, 2, 3) == keyed_uniform(1, 2, 3));
  CHECK(keyed_uniform(1, 2, 3) != keyed_uniform(1, 2, 4));
  CHECK(keyed_uniform(1, 2, 3) != keyed_uniform(2, 2, 3));
  double mean = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = keyed_uniform(5, i, 0);
    CHECK_UNARY(u >= 0.0 && u < 1.0);
    mean += u;
  }
  CHECK(mean / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("noiseless GHZ rounds are perfectly correlated") {
  const GraphState net = fixture::six_node_network();
  const ExtractionPlan plan = fixture::six_node_ghz_plan();
  SimulationOptions opt;
  opt.rounds = 10000;
  opt.seed = 3;
  const auto r = simulate_protocol(plan, net, pure_state_model(net), opt);
  CHECK(r.type1.total() + r.type2.total() == 10000);
  CHECK(r.type1.total() > 4500);
  CHECK(r.type1.counts[0] > 0);
  CHECK(r.type1.counts[15] > 0);
  CHECK(mass_outside(r.type1, {"0000", "1111"}) == 0);
  CHECK(estimate_qber(r.type1).qber == 0.0);
  CHECK(estimate_qx(r.type2) == 0.0);
  CHECK(r.type1.setting.basis_string() == "ZZXXZZ");
  CHECK(r.type2.setting.basis_string() == "XYXXXY");
}

TEST_CASE("noiseless Bell pair") {
  const GraphState net = graph_state_of(Graph(2, {{0, 1}}));
  const auto plan = find_ghz_plan(net, {0, 1});
  REQUIRE(plan.has_value());
  SimulationOptions opt;
  opt.seed = 9;
  const auto r = simulate_protocol(*plan, net, pure_state_model(net), opt);
  CHECK(mass_outside(r.type1, {"00", "11"}) == 0);
  CHECK(estimate_qx(r.type2) == 0.0);
}

TEST_CASE("bridging pair and two-pair copy are noiseless too") {
  const GraphState net = fixture::six_node_network();
  for (const ExtractionPlan& plan : fixture::six_node_pair_plans()) {
    SimulationOptions opt;
    opt.seed = 17;
    opt.rounds = 4000;
    const auto r = simulate_protocol(plan, net, pure_state_model(net), opt);
    for (const auto& [a, b] : plan.pairs) {
      const int i = plan.participant_index(a), j = plan.participant_index(b);
      CHECK(pairwise_error(r.type1, i, j) == 0.0);
      CHECK(estimate_qx(r.type2, {i, j}) == 0.0);
    }
  }
}

TEST_CASE("simulation is a pure function of the seed") {
  const GraphState net = fixture::six_node_network();
  const ExtractionPlan plan = fixture::six_node_ghz_plan();
  NoiseModel m;
  m.depolarizing = {0.1, 0, 0, 0.2, 0, 0};
  const auto model = noisy_state_model(net, m);
  SimulationOptions opt;
  opt.rounds = 5000;
  opt.seed = 42;
  const auto a = simulate_protocol(plan, net, model, opt);
  const auto b = simulate_protocol(plan, net, model, opt);
  CHECK(a.type1 == b.type1);
  CHECK(a.type2 == b.type2);
  opt.seed = 43;
  CHECK_FALSE(simulate_protocol(plan, net, model, opt).type1 == a.type1);
}

TEST_CASE("depolarized Bell pair has QBER lambda/2") {
  const GraphState net = graph_state_of(Graph(2, {{0, 1}}));
  const auto plan = *find_ghz_plan(net, {0, 1});
  for (double lam : {0.04, 0.2}) {
    NoiseModel m;
    m.depolarizing = {lam, 0.0};
    SimulationOptions opt;
    opt.rounds = 100000;
    opt.seed = 1;
    const auto r = simulate_protocol(plan, net, noisy_state_model(net, m), opt);
    CHECK(within_3_sigma(pairwise_error(r.type1, 0, 1), lam / 2, r.type1.total()));
    CHECK(within_3_sigma(estimate_qx(r.type2), lam / 2, r.type2.total()));
  }
}

TEST_CASE("estimates converge to the channel values on the six-vertex network") {
  const GraphState net = fixture::six_node_network();
  const ExtractionPlan plan = fixture::six_node_ghz_plan();
  NoiseModel m;
  m.depolarizing = {0.02, 0.05, 0.03, 0.0, 0.05, 0.01};
  m.dephasing = {0.0, 0.02, 0.0, 0.04, 0.0, 0.0};
  m.white_noise = 0.03;
  SimulationOptions opt;
  opt.rounds = 100000;
  opt.seed = 2024;
  const auto r = simulate_protocol(plan, net, noisy_state_model(net, m), opt);
  const double qx = (1.0 - analytic_parity(plan, RoundType::Type2, {}, m)) / 2;
  CHECK(within_3_sigma(estimate_qx(r.type2), qx, r.type2.total()));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double q = (1.0 - analytic_parity(plan, RoundType::Type1, {i, j}, m)) / 2;
      CHECK(within_3_sigma(pairwise_error(r.type1, i, j), q, r.type1.total()));
    }
}

TEST_CASE("disclosed fraction thins the type-1 counts") {
  const GraphState net = fixture::six_node_network();
  const ExtractionPlan plan = fixture::six_node_ghz_plan();
  SimulationOptions opt;
  opt.rounds = 20000;
  opt.disclosed_fraction = 0.25;
  const auto r = simulate_protocol(plan, net, pure_state_model(net), opt);
  CHECK(r.type1.total() == doctest::Approx(2500).epsilon(0.1));
  CHECK(r.type2.total() == doctest::Approx(10000).epsilon(0.05));
}

TEST_CASE("simulation option errors") {
  const GraphState net = fixture::six_node_network();
  const ExtractionPlan plan = fixture::six_node_ghz_plan();
  const auto model = pure_state_model(net);
  SimulationOptions opt;
  opt.rounds = 0;
  CHECK_THROWS_AS(simulate_protocol(plan, net, model, opt), InvalidArgument);
  opt = {};
  opt.type2_fraction = 1.0;
  CHECK_THROWS_AS(simulate_protocol(plan, net, model, opt), InvalidArgument);
  opt = {};
  opt.disclosed_fraction = 0.0;
  CHECK_THROWS_AS(simulate_protocol(plan, net, model, opt), InvalidArgument);
  const GraphState small = graph_state_of(Graph(2, {{0, 1}}));
  CHECK_THROWS_AS(simulate_protocol(plan, small, pure_state_model(small), SimulationOptions{}), InvalidArgument);
}
