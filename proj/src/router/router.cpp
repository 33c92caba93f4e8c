#include "gsnet/router/router.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <tuple>

#include "gsnet/core/errors.hpp"

namespace gsnet {

namespace {

VertexMask mask_of(const std::vector<int>& vs) {
  VertexMask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

std::vector<int> list_of(VertexMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

bool residual_matches(const Graph& residual, const ExtractionTask& task) {
  const VertexMask part = mask_of(task.participants);
  if (task.kind == ResourceKind::Ghz) return is_ghz_shape(residual, part);
  for (int v : task.participants) {
    const VertexMask nb = residual.neighbors(v) & part;
    if (std::popcount(nb) != 1) return false;
  }
  for (const auto& [a, b] : task.pairs)
    if (!residual.has_edge(a, b)) return false;
  return true;
}

struct Branch {
  GraphState state;
  std::vector<SignedPauli> bases;
};

// Measures `measured` in ascending order with the given physical outcomes, drops the
// discarded vertices and brings a complete GHZ residual to star form.
Branch run_branch(const GraphState& post_lc, const ExtractionTask& task, const std::vector<int>& measured,
                  const std::vector<int>& discarded, const std::vector<int>& outcomes,
                  const std::vector<SignedPauli>* fixed_bases) {
  Branch br{post_lc, {}};
  for (std::size_t i = 0; i < measured.size(); ++i) {
    const int d = measured[i];
    const SignedPauli basis = br.state.frames[d].image(Pauli::Z);
    if (fixed_bases && (*fixed_bases)[i].letter != basis.letter)
      throw Error("measured basis differs between branches");
    br.bases.push_back(basis);
    br.state = measure_vertex(br.state, basis.letter, d, outcomes[i]).state;
  }
  for (int d : discarded) {
    br.state.graph.remove_vertex(d);
    br.state.frames[d] = LocalClifford::identity();
  }
  const int k = static_cast<int>(task.participants.size());
  if (task.kind == ResourceKind::Ghz && k >= 3 &&
      br.state.graph.edge_count() == static_cast<std::size_t>(k * (k - 1) / 2))
    br.state = local_complement(br.state, task.participants.front());
  return br;
}

// Frames F with state = (prod F_v)|R>: the star centre keeps its frame, leaves get an
// extra H since H on the leaves maps GHZ to the star graph state.
std::vector<LocalClifford> resource_frames(const GraphState& residual, const ExtractionTask& task) {
  const LocalClifford h = LocalClifford::hadamard();
  std::vector<LocalClifford> f;
  const int k = static_cast<int>(task.participants.size());
  if (task.kind == ResourceKind::Ghz) {
    int centre = task.participants.front();
    if (k >= 3)
      for (int v : task.participants)
        if (residual.graph.degree(v) == k - 1) centre = v;
    for (int v : task.participants)
      f.push_back(v == centre ? residual.frames[v] : residual.frames[v] * h);
    return f;
  }
  for (int v : task.participants) {
    const int partner = std::countr_zero(residual.graph.neighbors(v));
    f.push_back(v < partner ? residual.frames[v] : residual.frames[v] * h);
  }
  return f;
}

ExtractionPlan build_plan(const GraphState& network, const ExtractionTask& task,
                          const std::vector<int>& seq, const std::vector<int>& measured,
                          const std::vector<int>& discarded) {
  GraphState post_lc = network;
  for (int v : seq) post_lc = local_complement(post_lc, v);
  const std::vector<int> zeros(measured.size(), 0);
  const Branch ref = run_branch(post_lc, task, measured, discarded, zeros, nullptr);

  ExtractionPlan plan;
  plan.kind = task.kind;
  plan.network_size = network.graph.size();
  plan.participants = task.participants;
  plan.pairs = task.pairs;
  plan.lc_sequence = seq;
  plan.measured = measured;
  plan.discarded = discarded;
  plan.measured_bases = ref.bases;
  plan.participant_frames = resource_frames(ref.state, task);
  for (std::size_t i = 0; i < measured.size(); ++i) {
    std::vector<int> outcomes(measured.size(), 0);
    outcomes[i] = 1;
    const Branch br = run_branch(post_lc, task, measured, discarded, outcomes, &ref.bases);
    if (!(br.state.graph == ref.state.graph)) throw Error("branch residual graphs differ");
    const std::vector<LocalClifford> f = resource_frames(br.state, task);
    std::vector<Pauli> gen;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const LocalClifford q = plan.participant_frames[k].inverse() * f[k];
      if (!q.is_pauli()) throw Error("byproduct is not a Pauli");
      gen.push_back(q.pauli_part());
    }
    plan.byproduct_generators.push_back(std::move(gen));
  }
  return plan;
}

void check_verified(const GraphState& network, const ExtractionPlan& plan, const PlanOptions& opt) {
  if (!opt.verify || network.graph.active_count() > 10) return;
  const double f = verify_plan(network, plan);
  if (f < 1.0 - 1e-10)
    throw Error("extraction plan failed dense verification (fidelity " + std::to_string(f) + ")");
}

}  // namespace

bool is_ghz_shape(const Graph& g, VertexMask on) {
  const int k = std::popcount(on);
  if (k < 2) return false;
  int edges = 0;
  int hubs = 0;
  int leaves = 0;
  for (int v : list_of(on)) {
    const int d = std::popcount(g.neighbors(v) & on);
    edges += d;
    if (d == k - 1) ++hubs;
    if (d == 1) ++leaves;
  }
  edges /= 2;
  if (edges == k * (k - 1) / 2) return true;
  if (k == 2) return edges == 1;
  return edges == k - 1 && hubs == 1 && leaves == k - 1;
}

Router::Router(GraphState network, PlanOptions options)
    : network_(std::move(network)), options_(options) {}

const LcOrbit& Router::orbit() {
  if (!orbit_) orbit_ = std::make_unique<LcOrbit>(network_.graph, options_.max_orbit);
  return *orbit_;
}

std::optional<ExtractionPlan> Router::find_plan(const ExtractionTask& task) {
  const VertexMask part = mask_of(task.participants);
  const VertexMask nonpart = mask_of(task.nonparticipants);
  const int k_non = std::popcount(nonpart);
  if (options_.loss_tolerant && k_non > options_.max_nonparticipants)
    throw CapExceeded("loss-tolerant search limited to " +
                      std::to_string(options_.max_nonparticipants) + " nonparticipants");
  const std::vector<int> non_list = list_of(nonpart);
  const std::uint64_t subsets = options_.loss_tolerant ? (std::uint64_t{1} << k_non) : 1;

  const LcOrbit& orb = orbit();
  // (measured count or 0, non-Z count, sequence, discarded) within the first
  // depth level that has any candidate.
  using Key = std::tuple<int, int, std::vector<int>, std::vector<int>>;
  std::optional<Key> best;
  int best_depth = -1;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    if (best && orb.depth(i) > best_depth) break;
    const Graph& member = orb.member(i);
    std::optional<GraphState> post_lc;
    std::vector<int> seq;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      VertexMask discarded = 0;
      for (int j = 0; j < k_non; ++j)
        if ((s >> j) & 1U) discarded |= bit(non_list[j]);
      Graph residual = member;
      for (int d : non_list)
        if (!(discarded & bit(d))) residual.remove_vertex(d);
      bool isolated = true;
      for (int d : list_of(discarded))
        if (residual.neighbors(d) & part) isolated = false;
      if (!isolated) continue;
      for (int d : list_of(discarded)) residual.remove_vertex(d);
      if (!residual_matches(residual, task)) continue;

      if (!post_lc) {
        seq = orb.sequence_to(i);
        GraphState gs = network_;
        for (int v : seq) gs = local_complement(gs, v);
        post_lc = std::move(gs);
      }
      int non_z = 0;
      for (int d : non_list)
        if (!(discarded & bit(d)) && post_lc->frames[d].image(Pauli::Z).letter != Pauli::Z) ++non_z;
      const int measured = options_.loss_tolerant ? k_non - std::popcount(discarded) : 0;
      Key key{measured, non_z, seq, list_of(discarded)};
      if (!best || key < *best) {
        best = std::move(key);
        best_depth = orb.depth(i);
      }
    }
  }
  if (!best) return std::nullopt;

  const std::vector<int>& seq = std::get<2>(*best);
  const std::vector<int>& discarded = std::get<3>(*best);
  std::vector<int> measured;
  for (int d : non_list)
    if (!std::binary_search(discarded.begin(), discarded.end(), d)) measured.push_back(d);
  ExtractionPlan plan = build_plan(network_, task, seq, measured, discarded);
  check_verified(network_, plan, options_);
  return plan;
}

std::optional<ExtractionPlan> Router::find_ghz_plan(const std::vector<int>& targets) {
  return find_plan(ExtractionTask::ghz(network_.graph, targets));
}

std::optional<ExtractionPlan> Router::find_bell_multicast_plan(
    const std::vector<std::pair<int, int>>& pairs) {
  return find_plan(ExtractionTask::bell_multicast(network_.graph, pairs));
}

std::optional<ExtractionPlan> find_ghz_plan(const GraphState& network, const std::vector<int>& targets,
                                            const PlanOptions& options) {
  return Router(network, options).find_ghz_plan(targets);
}

std::optional<ExtractionPlan> find_ghz_plan(const Graph& g, const std::vector<int>& targets,
                                            const PlanOptions& options) {
  return find_ghz_plan(graph_state_of(g), targets, options);
}

std::optional<ExtractionPlan> find_bell_multicast_plan(const GraphState& network,
                                                       const std::vector<std::pair<int, int>>& pairs,
                                                       const PlanOptions& options) {
  return Router(network, options).find_bell_multicast_plan(pairs);
}

std::optional<ExtractionPlan> find_bell_multicast_plan(const Graph& g,
                                                       const std::vector<std::pair<int, int>>& pairs,
                                                       const PlanOptions& options) {
  return find_bell_multicast_plan(graph_state_of(g), pairs, options);
}

std::optional<ExtractionPlan> realize_plan(const GraphState& network, const ExtractionTask& task,
                                           const std::vector<int>& lc_sequence,
                                           const std::vector<int>& discarded) {
  Graph g = network.graph;
  for (int v : lc_sequence) g.local_complement(v);
  std::vector<int> disc = discarded;
  std::sort(disc.begin(), disc.end());
  std::vector<int> measured;
  for (int d : task.nonparticipants)
    if (!std::binary_search(disc.begin(), disc.end(), d)) measured.push_back(d);
  for (int d : disc)
    if (!std::binary_search(task.nonparticipants.begin(), task.nonparticipants.end(), d))
      throw InvalidArgument("only nonparticipants can be discarded");
  for (int d : measured) g.remove_vertex(d);
  for (int d : disc)
    if (g.neighbors(d) & mask_of(task.participants)) return std::nullopt;
  for (int d : disc) g.remove_vertex(d);
  if (!residual_matches(g, task)) return std::nullopt;
  return build_plan(network, task, lc_sequence, measured, disc);
}

}  // namespace gsnet
