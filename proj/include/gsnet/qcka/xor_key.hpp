#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace gsnet {

using KeyBits = std::vector<std::uint8_t>;  // one 0/1 entry per bit

/// A pairwise key shared by vertices a and b.
struct KeyLink {
  int a = -1;
  int b = -1;
  KeyBits key;
};

struct ConferenceKey {
  KeyBits key;
  /// Public mask per link (same order as the input), key XOR link key.
  std::vector<KeyBits> masks;
  /// What every participant recovers from its own link keys and the masks.
  std::map<int, KeyBits> reconstructed;
};

KeyBits xor_bits(const KeyBits& x, const KeyBits& y);

/// Conference key from pairwise keys: the key is Alice's first link key and every
/// link announces key XOR link key. Throws InvalidArgument on length mismatch, when
/// Alice has no link, or when the links do not connect all their endpoints.
ConferenceKey xor_combine(const std::vector<KeyLink>& links, int alice);

}  // namespace gsnet
