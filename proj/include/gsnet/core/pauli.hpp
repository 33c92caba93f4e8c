#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gsnet {

/// Single-qubit Pauli letter, encoded by its (x, z) symplectic bits: bit 0 = x, bit 1 = z.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool has_x(Pauli p) noexcept { return (static_cast<unsigned>(p) & 1U) != 0; }
constexpr bool has_z(Pauli p) noexcept { return (static_cast<unsigned>(p) & 2U) != 0; }

/// Product of two letters ignoring phase.
constexpr Pauli pauli_product(Pauli a, Pauli b) noexcept {
  return static_cast<Pauli>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

constexpr bool commutes(Pauli a, Pauli b) noexcept {
  const bool xz = has_x(a) && has_z(b);
  const bool zx = has_z(a) && has_x(b);
  return xz == zx;
}

char to_char(Pauli p) noexcept;
/// Accepts I, X, Y, Z (case-insensitive); throws InvalidArgument otherwise.
Pauli pauli_from_char(char c);

struct SignedPauli {
  Pauli letter = Pauli::I;
  int sign = 1;  // +1 or -1

  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

std::string to_string(const SignedPauli& p);

/// Tensor product of letters with an overall sign; entry k acts on qubit k.
struct PauliObservable {
  std::vector<Pauli> letters;
  int sign = 1;

  static PauliObservable parse(std::string_view text);  // e.g. "ZZXXZZ" or "-XIX"
  std::size_t size() const noexcept { return letters.size(); }
  bool is_identity() const noexcept;
  std::string to_string() const;

  friend bool operator==(const PauliObservable&, const PauliObservable&) = default;
};

}  // namespace gsnet
