#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsnet/core/graph_state.hpp"
#include "gsnet/core/local_clifford.hpp"
#include "gsnet/core/pauli.hpp"

namespace gsnet {

enum class ResourceKind { Ghz, BellMulticast };

std::string to_string(ResourceKind k);

/// What a plan must produce. Participants are kept sorted; pairs are stored with the
/// smaller label first.
struct ExtractionTask {
  ResourceKind kind = ResourceKind::Ghz;
  std::vector<int> participants;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> nonparticipants;

  /// Throws InvalidArgument for labels not in the graph, fewer than two targets or
  /// overlapping pairs.
  static ExtractionTask ghz(const Graph& g, std::vector<int> targets);
  static ExtractionTask bell_multicast(const Graph& g, std::vector<std::pair<int, int>> pairs);
};

/// Recipe turning one copy of the network state into the requested resource.
///
/// Apply lc_sequence (frame bookkeeping only), then measure every vertex in
/// `measured` in its logical Z basis; measured_bases holds the physical Pauli that
/// realises it, with the sign seen on the all-zero branch. Vertices in `discarded`
/// are never measured (loss-tolerant plans only). On the all-zero branch the
/// participants hold (prod_v participant_frames[v]) |R>, where |R> is the GHZ state
/// (|0..0> + |1..1>)/sqrt(2) over all participants or a product of
/// (|00> + |11>)/sqrt(2) over the pairs. Outcome 1 on measured[i] multiplies the
/// participant state by the Pauli string byproduct_generators[i] inside the frames.
struct ExtractionPlan {
  ResourceKind kind = ResourceKind::Ghz;
  int network_size = 0;
  std::vector<int> participants;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> lc_sequence;
  std::vector<int> measured;
  std::vector<int> discarded;
  std::vector<SignedPauli> measured_bases;
  std::vector<LocalClifford> participant_frames;
  std::vector<std::vector<Pauli>> byproduct_generators;  // [measured][participant]
  int copies_required = 1;

  int participant_index(int v) const;  // -1 when v is not a participant
  bool operator==(const ExtractionPlan&) const = default;
};

enum class RoundType { Type1 = 1, Type2 = 2 };

/// Physical measurement setting for every vertex slot of the network.
///
/// bases is I for discarded or absent vertices. For a participant, the bit of the
/// ideal resource equals the physical outcome bit XOR (signs[v] < 0), before byproduct
/// correction. For measured vertices, signs[v] is the all-zero-branch sign.
struct RoundSetting {
  RoundType type = RoundType::Type1;
  std::vector<Pauli> bases;
  std::vector<int> signs;

  std::string basis_string() const;
  bool operator==(const RoundSetting&) const = default;
};

RoundSetting compile_round_settings(const ExtractionPlan& plan, RoundType type);

/// Per-participant Pauli accumulated from the measured-vertex outcomes
/// (outcomes[i] belongs to plan.measured[i]). Throws InvalidArgument on a size mismatch.
std::vector<Pauli> byproduct_paulis(const ExtractionPlan& plan, const std::vector<int>& outcomes);

/// Per-participant bit flips that undo the byproduct for the given round type.
std::vector<int> byproduct_correction(const ExtractionPlan& plan, const std::vector<int>& outcomes,
                                      RoundType type);

/// Maps raw physical bits (one per vertex slot, as produced under `setting`) to the
/// corrected participant bits, participant order.
std::vector<int> corrected_participant_bits(const ExtractionPlan& plan, const RoundSetting& setting,
                                            const std::vector<int>& raw_bits);

/// Dense check of every outcome branch. Returns the smallest fidelity between the
/// participants' reduced state and the frame-and-byproduct-adjusted ideal resource.
/// Throws CapExceeded above 10 active vertices.
double verify_plan(const GraphState& network, const ExtractionPlan& plan);

/// Ideal resource |R> over the plan's participants (participant order).
DenseState ideal_resource(const ExtractionPlan& plan);

}  // namespace gsnet
