#include "gsnet/core/graph_state.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "gsnet/core/errors.hpp"

namespace gsnet {

namespace {

// frames[v] <- frames[v] * g, tracking the phase picked up by the table representative.
void right_multiply(GraphState& gs, int v, const Eigen::Matrix2cd& g) {
  const auto r = LocalClifford::from_matrix(gs.frames[v].matrix() * g);
  if (!r) throw Error("frame update left the Clifford group");
  gs.frames[v] = r->first;
  if (gs.phase_tracked) gs.phase *= r->second;
}

// Moves every Pauli part with an X component into the stabilizer: for such a vertex a,
// right-multiply by K_a = X_a prod_{b in N(a)} Z_b, which fixes |G>. Afterwards each
// frame is (coset representative) * {I or Z}, which makes LC an exact involution.
void canonicalize(GraphState& gs) {
  const Eigen::Matrix2cd x = gates::pauli(Pauli::X);
  const Eigen::Matrix2cd z = gates::pauli(Pauli::Z);
  for (int a : gs.graph.vertices()) {
    if (!has_x(gs.frames[a].pauli_part())) continue;
    right_multiply(gs, a, x);
    VertexMask nb = gs.graph.neighbors(a);
    while (nb) {
      const int b = std::countr_zero(nb);
      nb &= nb - 1;
      right_multiply(gs, b, z);
    }
  }
}

void lc_in_place(GraphState& gs, int v) {
  const VertexMask nb = gs.graph.neighbors(v);
  const int d = std::popcount(nb);
  right_multiply(gs, v, gates::sqrt_minus_i_x().adjoint());
  VertexMask m = nb;
  while (m) {
    const int b = std::countr_zero(m);
    m &= m - 1;
    right_multiply(gs, b, gates::sqrt_i_z().adjoint());
  }
  gs.graph.local_complement(v);
  if (gs.phase_tracked) {
    // U|G> = exp(i pi (d-1)/4) |tau_v G>, read off the |0...0> amplitude.
    gs.phase *= std::polar(1.0, std::numbers::pi * (d - 1) / 4.0);
  }
}

struct Raw {
  GraphState state;
  double probability;
};

// Logical Z measurement at v with logical outcome m.
void z_delete(GraphState& gs, int v, int m) {
  VertexMask nb = gs.graph.neighbors(v);
  if (m) {
    const Eigen::Matrix2cd z = gates::pauli(Pauli::Z);
    while (nb) {
      const int b = std::countr_zero(nb);
      nb &= nb - 1;
      right_multiply(gs, b, z);
    }
  }
  gs.graph.remove_vertex(v);
  gs.frames[v] = LocalClifford::identity();
}

Raw measure_raw(const GraphState& in, Pauli basis, int v, int outcome) {
  if (basis == Pauli::I) throw InvalidArgument("measurement basis must be X, Y or Z");
  if (outcome != 0 && outcome != 1) throw InvalidArgument("outcome must be 0 or 1");
  if (!in.graph.active(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not present");
  GraphState gs = in;
  gs.phase_tracked = false;
  gs.phase = 1.0;

  SignedPauli logical = gs.frames[v].preimage(basis);
  if (logical.letter == Pauli::X && gs.graph.degree(v) == 0) {
    // |+> is the +1 eigenstate of X.
    const int forced = logical.sign < 0 ? 1 : 0;
    if (outcome != forced) return {gs, 0.0};
    gs.graph.remove_vertex(v);
    gs.frames[v] = LocalClifford::identity();
    return {gs, 1.0};
  }
  if (logical.letter == Pauli::X) {
    const int b0 = std::countr_zero(gs.graph.neighbors(v));
    lc_in_place(gs, b0);
    logical = gs.frames[v].preimage(basis);
  }
  if (logical.letter == Pauli::Y) {
    lc_in_place(gs, v);
    logical = gs.frames[v].preimage(basis);
  }
  if (logical.letter != Pauli::Z) throw Error("measurement reduction did not reach Z");
  const int m = outcome ^ (logical.sign < 0 ? 1 : 0);
  z_delete(gs, v, m);
  canonicalize(gs);
  return {gs, 0.5};
}

}  // namespace

int GraphState::qubit_of(int v) const {
  if (!graph.active(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not present");
  return std::popcount(graph.active_mask() & (bit(v) - 1));
}

GraphState graph_state_of(const Graph& g, bool track_phase) {
  GraphState gs;
  gs.graph = g;
  gs.frames.assign(static_cast<std::size_t>(g.size()), LocalClifford::identity());
  gs.phase_tracked = track_phase;
  return gs;
}

GraphState build_graph_state(int n, const std::vector<std::pair<int, int>>& edges,
                             bool track_phase) {
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) + "-" +
                            std::to_string(v));
  return graph_state_of(Graph(n, edges), track_phase);
}

GraphState apply_local(const GraphState& gs, int v, LocalClifford c) {
  if (!gs.graph.active(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not present");
  GraphState out = gs;
  const auto r = LocalClifford::from_matrix(c.matrix() * gs.frames[v].matrix());
  out.frames[v] = r->first;
  if (out.phase_tracked) out.phase *= r->second;
  canonicalize(out);
  return out;
}

GraphState local_complement(const GraphState& gs, int v) {
  if (!gs.graph.active(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not present");
  GraphState out = gs;
  lc_in_place(out, v);
  canonicalize(out);
  return out;
}

double outcome_probability(const GraphState& gs, Pauli basis, int v, int outcome) {
  if (!gs.graph.active(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not present");
  if (basis == Pauli::I) throw InvalidArgument("measurement basis must be X, Y or Z");
  const SignedPauli logical = gs.frames[v].preimage(basis);
  if (logical.letter == Pauli::X && gs.graph.degree(v) == 0)
    return outcome == (logical.sign < 0 ? 1 : 0) ? 1.0 : 0.0;
  return 0.5;
}

MeasurementResult measure_vertex(const GraphState& gs, Pauli basis, int v, int outcome) {
  Raw r = measure_raw(gs, basis, v, outcome);
  if (r.probability == 0.0)
    throw InvalidArgument("outcome " + std::to_string(outcome) + " on vertex " +
                          std::to_string(v) + " has probability 0");
  MeasurementRecord rec{v, basis, outcome, r.probability, {}};
  if (outcome == 1 && r.probability < 1.0) {
    const Raw ref = measure_raw(gs, basis, v, 0);
    for (int b : r.state.graph.vertices()) {
      const LocalClifford q = r.state.frames[b] * ref.state.frames[b].inverse();
      if (!q.is_pauli()) throw Error("branch frames differ by a non-Pauli");
      const Pauli p = q.pauli_part();
      if (p != Pauli::I) rec.byproduct.emplace_back(b, SignedPauli{p, 1});
    }
  }
  return {std::move(r.state), std::move(rec)};
}

DenseState to_dense(const GraphState& gs) {
  const std::vector<int> vs = gs.graph.vertices();
  const int n = static_cast<int>(vs.size());
  if (n > DenseState::kMaxQubits)
    throw CapExceeded("dense form limited to 12 qubits, state has " + std::to_string(n));
  Amplitudes a = DenseState::plus(n).amplitudes();
  for (const auto& [u, v] : gs.graph.edges()) dense::apply_cz(a, gs.qubit_of(u), gs.qubit_of(v));
  for (int k = 0; k < n; ++k) {
    const LocalClifford c = gs.frames[vs[k]];
    if (c != LocalClifford::identity()) dense::apply_1q(a, k, c.matrix());
  }
  if (gs.phase_tracked) a *= gs.phase;
  return DenseState(std::move(a));
}

bool states_equal(const GraphState& a, const GraphState& b, bool up_to_global_phase) {
  if (a.graph.active_count() != b.graph.active_count())
    throw InvalidArgument("states have different vertex counts");
  const DenseState da = to_dense(a);
  const DenseState db = to_dense(b);
  const std::complex<double> ov = overlap(da, db);
  if (!up_to_global_phase && a.phase_tracked && b.phase_tracked)
    return std::abs(ov - 1.0) < 1e-10;
  return std::abs(std::norm(ov) - 1.0) < 1e-10;
}

SignedPauli physical_pauli(const GraphState& gs, int v, Pauli logical) {
  if (!gs.graph.active(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not present");
  return gs.frames[v].image(logical);
}

}  // namespace gsnet
