#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "gsnet/core/dense_state.hpp"
#include "gsnet/core/graph.hpp"
#include "gsnet/core/local_clifford.hpp"
#include "gsnet/core/pauli.hpp"

namespace gsnet {

/// The state (prod_v C_v) |G> with C_v = frames[v].
///
/// frames has one entry per vertex slot; entries of removed vertices are identity.
/// When phase_tracked is set, `phase` is the exact global factor in front of
/// (prod_v M_v)|G>, M_v being the table matrix of frames[v].
struct GraphState {
  Graph graph;
  std::vector<LocalClifford> frames;
  bool phase_tracked = false;
  std::complex<double> phase{1.0, 0.0};

  std::vector<int> vertices() const { return graph.vertices(); }
  /// Position of label v among the active vertices (its dense qubit index).
  int qubit_of(int v) const;
};

GraphState build_graph_state(int n, const std::vector<std::pair<int, int>>& edges,
                             bool track_phase = false);
GraphState graph_state_of(const Graph& g, bool track_phase = false);

/// Applies the single-qubit Clifford c on vertex v after the state: C_v <- c * C_v.
GraphState apply_local(const GraphState& gs, int v, LocalClifford c);

/// Local complementation at v. The graph is toggled on N(v) and the frames absorb the
/// inverse of exp(-i pi/4 X) on v and exp(i pi/4 Z) on each neighbour, so the
/// physical state is unchanged.
GraphState local_complement(const GraphState& gs, int v);

struct MeasurementRecord {
  int vertex = -1;
  Pauli basis = Pauli::Z;  // physical basis
  int outcome = 0;
  double probability = 0.0;
  /// Physical Pauli on each remaining vertex that maps this branch's output to the
  /// outcome-0 branch's output. Empty for outcome 0 and for deterministic outcomes.
  std::vector<std::pair<int, SignedPauli>> byproduct;
};

struct MeasurementResult {
  GraphState state;
  MeasurementRecord record;
};

/// Probability of measuring `outcome` on vertex v in the physical Pauli basis.
double outcome_probability(const GraphState& gs, Pauli basis, int v, int outcome);

/// Measures vertex v in a physical Pauli basis and removes it. X-type logical
/// measurements use the lowest-label neighbour as the special neighbour.
/// Throws InvalidArgument if the requested outcome has probability 0.
MeasurementResult measure_vertex(const GraphState& gs, Pauli basis, int v, int outcome);

/// Dense amplitudes over the active vertices in increasing label order.
/// Throws CapExceeded above 12 active vertices.
DenseState to_dense(const GraphState& gs);

/// Compares dense forms. With up_to_global_phase off and both phases tracked the
/// comparison is phase-sensitive.
bool states_equal(const GraphState& a, const GraphState& b, bool up_to_global_phase = true);

/// Physical Pauli C_v L C_v^dagger for a logical Pauli L on vertex v.
SignedPauli physical_pauli(const GraphState& gs, int v, Pauli logical);

}  // namespace gsnet
