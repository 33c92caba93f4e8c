#pragma once

#include <vector>

#include "gsnet/core/dense_state.hpp"

namespace gsnet {

/// Qubit-level model of a polarization linear-optics circuit (h = 0, v = 1).
///
/// A fusion gate is modelled by its success branch: the parity projector
/// |hh><hh| + |vv><vv| on the two modes, which succeeds with probability 1/2 on
/// the inputs used here.
class LinearOpticsCircuit {
 public:
  enum class OpKind { BellPair, PlusPair, Fusion, Hadamard, PauliZ };
  struct Op {
    OpKind kind;
    int a;
    int b;  // unused for single-mode operations
  };
  struct Output {
    DenseState state;
    double success_probability;
  };

  explicit LinearOpticsCircuit(int modes);

  /// (|hh> + |vv>)/sqrt(2) on modes a, b.
  LinearOpticsCircuit& bell_pair(int a, int b);
  /// |dd> on modes a, b, d = (h + v)/sqrt(2).
  LinearOpticsCircuit& plus_pair(int a, int b);
  LinearOpticsCircuit& fusion(int a, int b);
  LinearOpticsCircuit& hadamard(int q);
  LinearOpticsCircuit& pauli_z(int q);

  int modes() const noexcept { return modes_; }
  const std::vector<Op>& ops() const noexcept { return ops_; }
  int fusion_count() const;

  /// Throws Error if every fusion branch is empty.
  Output run() const;

 private:
  int modes_;
  std::vector<Op> ops_;
};

/// The six-photon network source: Bell pairs on modes (0,1) and (4,5), |dd> on (2,3),
/// fusions on (1,2) and (3,4), Hadamards on 2 and 3, then a fusion on (2,3).
/// With `sign_fix` the Z gates on modes 1, 3, 5 that fix the output sign pattern are
/// appended.
LinearOpticsCircuit six_photon_circuit(bool sign_fix = true);

}  // namespace gsnet
