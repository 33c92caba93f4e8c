#pragma once

// Library-backed fixtures shared by tests. Oracles live in oracles.hpp.

#include <vector>

#include "gsnet/core/graph_state.hpp"
#include "gsnet/router/router.hpp"
#include "gsnet/router/schedule.hpp"

namespace fixture {

inline const std::vector<std::pair<int, int>> kSixNodeEdges{{0, 1}, {1, 3}, {2, 3}, {3, 5}, {4, 5}};
inline const std::vector<int> kUsers{0, 1, 4, 5};

// Six-vertex network in the frame the source hands out: H on odd labels, Z on even.
inline gsnet::GraphState six_node_network() {
  using namespace gsnet;
  GraphState gs = build_graph_state(6, kSixNodeEdges);
  for (int v = 0; v < 6; ++v)
    gs = apply_local(gs, v, v % 2 == 0 ? LocalClifford::hadamard() : LocalClifford::pauli(Pauli::Z));
  return gs;
}

inline gsnet::ExtractionPlan six_node_ghz_plan() { return *gsnet::find_ghz_plan(six_node_network(), kUsers); }

// Copy 1 casts (1,2) and (5,6), copy 2 bridges (2,5).
inline std::vector<gsnet::ExtractionPlan> six_node_pair_plans() {
  gsnet::Router r(six_node_network());
  return gsnet::plan_explicit_schedule(r, {{{0, 1}, {4, 5}}, {{1, 4}}});
}

}  // namespace fixture
