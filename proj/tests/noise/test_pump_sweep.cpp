#include <doctest.h>

#include <cmath>

#include "gsnet/core/errors.hpp"
#include "gsnet/noise/pump_sweep.hpp"
#include "support/fixtures.hpp"

using namespace gsnet;

namespace {

ProtocolPlans plans() { return {fixture::six_node_ghz_plan(), fixture::six_node_pair_plans()}; }

double loglog_slope(const std::vector<SweepPoint>& g) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
  for (const auto& p : g)
    if (p.p_mw > 0) {
      const double x = std::log(p.p_mw), y = std::log(p.rate_hz);
      sx += x, sy += y, sxx += x * x, sxy += x * y, n += 1;
    }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("grid helper") {
  const auto g = linear_grid(0, 200, 201);
  CHECK(g.size() == 201);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 200.0);
  CHECK(g[105] == doctest::Approx(105.0));
  CHECK_THROWS_AS(linear_grid(0, 1, 1), InvalidArgument);
}

TEST_CASE("no contamination: flat key fraction, best at full power") {
  NoiseModel m;
  m.pump.contamination = 0.0;
  for (Protocol proto : {Protocol::Nqkd, Protocol::TwoQkd}) {
    const auto r = pump_sweep(m, linear_grid(0, 200, 201), plans(), proto);
    for (const auto& p : r.grid) CHECK(p.akr == (proto == Protocol::Nqkd ? 1.0 : 0.5));
    for (std::size_t i = 1; i < r.grid.size(); ++i) CHECK(r.grid[i].keyrate_hz > r.grid[i - 1].keyrate_hz);
    CHECK(r.argmax_p == 200.0);
  }
}

TEST_CASE("default pump model has an interior optimum") {
  const auto r = pump_sweep(NoiseModel{}, linear_grid(0, 200, 201), plans(), Protocol::Nqkd);
  CHECK(r.argmax_p > 0.0);
  CHECK(r.argmax_p < 200.0);
  CHECK(r.argmax_p == 108.0);  // regression value for the default coefficients
  for (std::size_t i = 1; i < r.grid.size(); ++i) CHECK(r.grid[i].akr <= r.grid[i - 1].akr);
  CHECK(r.grid.back().akr < 0.0);
  CHECK(r.grid.back().keyrate_hz == 0.0);
  CHECK(loglog_slope(r.grid) == doctest::Approx(3.0).epsilon(1e-9));
  const auto two = pump_sweep(NoiseModel{}, linear_grid(0, 200, 201), plans(), Protocol::TwoQkd);
  CHECK(two.argmax_p > 0.0);
  CHECK(two.argmax_p < 200.0);
  for (std::size_t i = 0; i < r.grid.size(); ++i) CHECK(two.grid[i].keyrate_hz <= r.grid[i].keyrate_hz);
}

TEST_CASE("rate slope on an uneven grid") {
  const auto r = pump_sweep(NoiseModel{}, {0.5, 1, 3, 17, 40, 41, 150}, plans(), Protocol::Nqkd);
  CHECK(loglog_slope(r.grid) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("base white noise composes with the pump term") {
  NoiseModel m;
  m.white_noise = 0.1;
  const auto r = pump_sweep(m, {0.0, 50.0}, plans(), Protocol::Nqkd);
  NoiseModel n;
  n.white_noise = 1 - 0.9 * (1 - m.pump.white_noise(50.0));
  n.pump.contamination = 0.0;
  const auto s = pump_sweep(n, {50.0}, plans(), Protocol::Nqkd);
  CHECK(r.grid[1].akr == doctest::Approx(s.grid[0].akr).epsilon(1e-12));
}

TEST_CASE("sweep errors") {
  CHECK_THROWS_AS(pump_sweep(NoiseModel{}, {}, plans(), Protocol::Nqkd), InvalidArgument);
  CHECK_THROWS_AS(pump_sweep(NoiseModel{}, {1, 1}, plans(), Protocol::Nqkd), InvalidArgument);
  CHECK_THROWS_AS(pump_sweep(NoiseModel{}, {-1, 1}, plans(), Protocol::Nqkd), InvalidArgument);
  CHECK_THROWS_AS(pump_sweep(NoiseModel{}, {1}, ProtocolPlans{}, Protocol::TwoQkd), InvalidArgument);
}
