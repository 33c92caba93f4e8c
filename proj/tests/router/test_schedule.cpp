#include <doctest.h>

#include "gsnet/core/errors.hpp"
#include "gsnet/router/schedule.hpp"

using namespace gsnet;

namespace {
const Graph kSixNode(6, {{0, 1}, {1, 3}, {2, 3}, {3, 5}, {4, 5}});
}

TEST_CASE("pairwise schedule on the six-vertex network needs two copies") {
  Router r(graph_state_of(kSixNode));
  const auto plans = plan_pairwise_schedule(r, {0, 1, 4, 5});
  REQUIRE(plans.size() == 2);
  CHECK(plans[0].pairs == std::vector<std::pair<int, int>>{{0, 1}, {4, 5}});
  CHECK(plans[1].pairs.size() == 1);
  CHECK(network_use_accounting(plans, Protocol::TwoQkd, {0, 1, 4, 5}) == 2);
  const auto ghz = r.find_ghz_plan({0, 1, 4, 5});
  REQUIRE(ghz.has_value());
  CHECK(network_use_accounting({*ghz}, Protocol::Nqkd) == 1);
}

TEST_CASE("explicit schedule with the (2,5) bridge") {
  Router r(graph_state_of(kSixNode));
  const auto plans = plan_explicit_schedule(r, {{{0, 1}, {4, 5}}, {{1, 4}}});
  REQUIRE(plans.size() == 2);
  CHECK(plans[1].pairs == std::vector<std::pair<int, int>>{{1, 4}});
  CHECK(network_use_accounting(plans, Protocol::TwoQkd) == 2);
  CHECK_THROWS_AS(plan_explicit_schedule(r, {{{0, 1}, {1, 4}}}), InvalidArgument);
}

TEST_CASE("ring schedule") {
  Router r(graph_state_of(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}})));
  const auto plans = plan_pairwise_schedule(r, {0, 2, 3, 5});
  CHECK(plans.size() == 2);
  for (const auto& p : plans) CHECK(p.pairs.size() == 2);
}

TEST_CASE("accounting errors") {
  Router r(graph_state_of(kSixNode));
  const auto plans = plan_explicit_schedule(r, {{{0, 1}, {4, 5}}});
  CHECK_THROWS_AS(network_use_accounting(plans, Protocol::TwoQkd), InvalidArgument);  // not spanning
  CHECK_THROWS_AS(network_use_accounting(plans, Protocol::Nqkd), InvalidArgument);    // wrong kind
  CHECK_THROWS_AS(network_use_accounting({}, Protocol::Nqkd), InvalidArgument);
  CHECK_THROWS_AS(plan_pairwise_schedule(r, {0}), InvalidArgument);
  Router split(graph_state_of(Graph(4, {{0, 1}, {2, 3}})));
  CHECK_THROWS_AS(plan_pairwise_schedule(split, {0, 2}), NoPlanError);
}
