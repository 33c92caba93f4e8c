#include "gsnet/core/pauli.hpp"

#include <algorithm>

#include "gsnet/core/errors.hpp"

namespace gsnet {

char to_char(Pauli p) noexcept {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default: break;
  }
  throw InvalidArgument(std::string("not a Pauli letter: '") + c + "'");
}

std::string to_string(const SignedPauli& p) {
  return std::string(p.sign < 0 ? "-" : "+") + to_char(p.letter);
}

PauliObservable PauliObservable::parse(std::string_view text) {
  PauliObservable obs;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    obs.sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  obs.letters.reserve(text.size());
  for (char c : text) obs.letters.push_back(pauli_from_char(c));
  return obs;
}

bool PauliObservable::is_identity() const noexcept {
  return std::all_of(letters.begin(), letters.end(), [](Pauli p) { return p == Pauli::I; });
}

std::string PauliObservable::to_string() const {
  std::string s = sign < 0 ? "-" : "";
  for (Pauli p : letters) s.push_back(to_char(p));
  return s;
}

}  // namespace gsnet
