#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "gsnet/core/pauli.hpp"

namespace gsnet {

using Amplitudes = Eigen::VectorXcd;

// Qubit k of an n-qubit register is bit (n - 1 - k) of the basis index, so qubit 0
// is the leftmost character of a ket label such as |0110>.

/// Normalized pure state on at most 12 qubits.
class DenseState {
 public:
  static constexpr int kMaxQubits = 12;
  static constexpr double kNormTolerance = 1e-12;

  /// Throws CapExceeded above 12 qubits, InvalidArgument on a bad length or norm.
  explicit DenseState(Amplitudes amplitudes);
  static DenseState basis_state(int n, std::uint64_t index);
  static DenseState plus(int n);
  /// Normalizes first; throws InvalidArgument for a zero vector.
  static DenseState normalized(Amplitudes amplitudes);

  int num_qubits() const noexcept { return n_; }
  const Amplitudes& amplitudes() const noexcept { return amps_; }

 private:
  int n_ = 0;
  Amplitudes amps_;
};

namespace dense {
// Kernels on unnormalized vectors.
int qubit_count(const Amplitudes& a);
void apply_1q(Amplitudes& a, int q, const Eigen::Matrix2cd& u);
void apply_cz(Amplitudes& a, int q0, int q1);
/// Applies the signed Pauli string.
void apply_pauli(Amplitudes& a, const PauliObservable& p);
/// Eigenvector of p with eigenvalue (-1)^outcome; p must not be I.
Eigen::Vector2cd eigenvector(Pauli p, int outcome);
/// Unitary that maps the eigenbasis of p to the computational basis.
Eigen::Matrix2cd to_z_basis(Pauli p);
}  // namespace dense

double expectation(const DenseState& s, const PauliObservable& obs);
/// <a|b>.
std::complex<double> overlap(const DenseState& a, const DenseState& b);
double fidelity(const DenseState& a, const DenseState& b);

struct Projection {
  DenseState state;  // remaining qubits, renormalized
  double probability = 0.0;
};

/// Measures `qubit` in `basis` (outcome bit m means eigenvalue (-1)^m) and removes it.
/// Returns nullopt when the outcome has probability below 1e-12.
std::optional<Projection> project_out(const DenseState& s, int qubit, Pauli basis, int outcome);

/// Probability of every joint outcome when qubit k is measured in bases[k].
/// Entries equal to I are not measured and always report bit 0.
std::vector<double> outcome_distribution(const DenseState& s, std::span<const Pauli> bases);

/// Reduced density matrix on `keep` (qubit indices, any order; result uses that order).
Eigen::MatrixXcd reduced_density_matrix(const DenseState& s, const std::vector<int>& keep);
double purity(const Eigen::MatrixXcd& rho);

}  // namespace gsnet
