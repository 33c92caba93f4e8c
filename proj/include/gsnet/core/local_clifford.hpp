#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "gsnet/core/pauli.hpp"

namespace gsnet {

/// Element of the single-qubit Clifford group modulo global phase.
///
/// Stored as an index into a 24-entry table built once from words in H, S, X, Y, Z.
/// Names are those words read as operator products, so "HS" is the matrix H*S.
class LocalClifford {
 public:
  static constexpr int kOrder = 24;

  constexpr LocalClifford() = default;

  static LocalClifford from_index(int index);
  static LocalClifford identity() { return {}; }
  static LocalClifford hadamard();
  static LocalClifford phase();  // S = diag(1, i)
  static LocalClifford pauli(Pauli p);
  /// Throws InvalidArgument for unknown names.
  static LocalClifford named(std::string_view name);
  /// Throws InvalidArgument unless the images are non-identity and anticommute.
  static LocalClifford from_images(SignedPauli x_image, SignedPauli z_image);
  /// Returns the element and the phase c with m == c * element.matrix(), if m is Clifford.
  static std::optional<std::pair<LocalClifford, std::complex<double>>> from_matrix(
      const Eigen::Matrix2cd& m);

  int index() const noexcept { return index_; }
  const std::string& name() const;
  /// Representative unitary; its first nonzero entry (row-major) is real and positive.
  const Eigen::Matrix2cd& matrix() const;

  /// C p C^dagger.
  SignedPauli image(Pauli p) const;
  SignedPauli image_of_x() const { return image(Pauli::X); }
  SignedPauli image_of_z() const { return image(Pauli::Z); }
  /// C^dagger p C.
  SignedPauli preimage(Pauli p) const;

  LocalClifford operator*(LocalClifford rhs) const;
  LocalClifford inverse() const;

  bool is_pauli() const;
  /// Decomposition C = coset_representative() * pauli_part() with the representative
  /// taken as the lowest-index element of the left coset C * {I, X, Y, Z}.
  LocalClifford coset_representative() const;
  Pauli pauli_part() const;

  friend bool operator==(LocalClifford, LocalClifford) = default;

 private:
  explicit constexpr LocalClifford(std::uint8_t i) : index_(i) {}
  std::uint8_t index_ = 0;
};

namespace gates {
Eigen::Matrix2cd pauli(Pauli p);
Eigen::Matrix2cd hadamard();
Eigen::Matrix2cd phase();
/// exp(-i pi/4 X), the square root of -iX used on the vertex of a local complementation.
Eigen::Matrix2cd sqrt_minus_i_x();
/// exp(+i pi/4 Z), applied to each neighbour in a local complementation.
Eigen::Matrix2cd sqrt_i_z();
}  // namespace gates

}  // namespace gsnet
