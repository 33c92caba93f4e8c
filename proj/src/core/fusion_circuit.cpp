#include "gsnet/core/fusion_circuit.hpp"

#include <algorithm>
#include <string>

#include "gsnet/core/errors.hpp"
#include "gsnet/core/local_clifford.hpp"

namespace gsnet {

LinearOpticsCircuit::LinearOpticsCircuit(int modes) : modes_(modes) {
  if (modes < 1 || modes > DenseState::kMaxQubits)
    throw CapExceeded("circuit limited to 12 modes, got " + std::to_string(modes));
}

namespace {
void check_mode(int modes, int q) {
  if (q < 0 || q >= modes) throw InvalidArgument("mode out of range: " + std::to_string(q));
}
}  // namespace

LinearOpticsCircuit& LinearOpticsCircuit::bell_pair(int a, int b) {
  check_mode(modes_, a);
  check_mode(modes_, b);
  ops_.push_back({OpKind::BellPair, a, b});
  return *this;
}

LinearOpticsCircuit& LinearOpticsCircuit::plus_pair(int a, int b) {
  check_mode(modes_, a);
  check_mode(modes_, b);
  ops_.push_back({OpKind::PlusPair, a, b});
  return *this;
}

LinearOpticsCircuit& LinearOpticsCircuit::fusion(int a, int b) {
  check_mode(modes_, a);
  check_mode(modes_, b);
  if (a == b) throw InvalidArgument("fusion needs two distinct modes");
  ops_.push_back({OpKind::Fusion, a, b});
  return *this;
}

LinearOpticsCircuit& LinearOpticsCircuit::hadamard(int q) {
  check_mode(modes_, q);
  ops_.push_back({OpKind::Hadamard, q, -1});
  return *this;
}

LinearOpticsCircuit& LinearOpticsCircuit::pauli_z(int q) {
  check_mode(modes_, q);
  ops_.push_back({OpKind::PauliZ, q, -1});
  return *this;
}

int LinearOpticsCircuit::fusion_count() const {
  return static_cast<int>(std::count_if(ops_.begin(), ops_.end(),
                                        [](const Op& o) { return o.kind == OpKind::Fusion; }));
}

LinearOpticsCircuit::Output LinearOpticsCircuit::run() const {
  // Sources act on |hh...h>; unpaired modes stay in h.
  Amplitudes a = DenseState::basis_state(modes_, 0).amplitudes();
  const Eigen::Matrix2cd h = gates::hadamard();
  for (const Op& op : ops_) {
    switch (op.kind) {
      case OpKind::BellPair:
        dense::apply_1q(a, op.a, h);
        dense::apply_1q(a, op.b, h);
        dense::apply_cz(a, op.a, op.b);
        dense::apply_1q(a, op.b, h);
        break;
      case OpKind::PlusPair:
        dense::apply_1q(a, op.a, h);
        dense::apply_1q(a, op.b, h);
        break;
      case OpKind::Fusion: {
        const std::uint64_t ma = std::uint64_t{1} << (modes_ - 1 - op.a);
        const std::uint64_t mb = std::uint64_t{1} << (modes_ - 1 - op.b);
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(a.size()); ++i)
          if (((i & ma) != 0) != ((i & mb) != 0)) a(static_cast<Eigen::Index>(i)) = 0.0;
        break;
      }
      case OpKind::Hadamard: dense::apply_1q(a, op.a, h); break;
      case OpKind::PauliZ: dense::apply_1q(a, op.a, gates::pauli(Pauli::Z)); break;
    }
  }
  const double p = a.squaredNorm();
  if (p < 1e-15) throw Error("circuit has no successful branch");
  return {DenseState::normalized(std::move(a)), p};
}

LinearOpticsCircuit six_photon_circuit(bool sign_fix) {
  LinearOpticsCircuit c(6);
  c.bell_pair(0, 1).plus_pair(2, 3).bell_pair(4, 5);
  c.fusion(1, 2).fusion(3, 4);
  c.hadamard(2).hadamard(3);
  c.fusion(2, 3);
  if (sign_fix) c.pauli_z(1).pauli_z(3).pauli_z(5);
  return c;
}

}  // namespace gsnet
