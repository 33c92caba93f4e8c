#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "gsnet/core/dense_state.hpp"
#include "gsnet/core/pauli.hpp"

namespace gsnet {

/// Mixed state on at most 8 qubits, same qubit ordering as DenseState.
class DensityOperator {
 public:
  static constexpr int kMaxQubits = 8;
  static constexpr double kTolerance = 1e-12;        // Hermiticity and trace
  static constexpr double kEigenvalueFloor = -1e-10;

  /// Validates the matrix. Throws CapExceeded above 8 qubits and InvalidArgument when
  /// it is not square of power-of-two size, not Hermitian, not of unit trace or has
  /// an eigenvalue below the floor.
  explicit DensityOperator(Eigen::MatrixXcd m);
  static DensityOperator pure(const DenseState& s);
  static DensityOperator maximally_mixed(int n);

  int num_qubits() const noexcept { return n_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  double purity() const;

 private:
  int n_ = 0;
  Eigen::MatrixXcd m_;
};

namespace mixed {
/// rho <- sum_k K_k rho K_k^dagger on one qubit, no validation.
void apply_channel(Eigen::MatrixXcd& rho, int q, std::span<const Eigen::Matrix2cd> kraus);
}  // namespace mixed

/// Tr(rho O). Throws InvalidArgument on an arity mismatch.
double expectation(const DensityOperator& rho, const PauliObservable& obs);

/// Joint outcome probabilities, same conventions as the pure-state version.
std::vector<double> outcome_distribution(const DensityOperator& rho, std::span<const Pauli> bases);

}  // namespace gsnet
