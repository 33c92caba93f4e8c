#include "gsnet/qcka/xor_key.hpp"

#include <deque>
#include <set>

#include "gsnet/core/errors.hpp"

namespace gsnet {

KeyBits xor_bits(const KeyBits& x, const KeyBits& y) {
  if (x.size() != y.size()) throw InvalidArgument("key length mismatch");
  KeyBits out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<std::uint8_t>((x[i] ^ y[i]) & 1U);
  return out;
}

ConferenceKey xor_combine(const std::vector<KeyLink>& links, int alice) {
  if (links.empty()) throw InvalidArgument("no pairwise keys");
  const std::size_t len = links.front().key.size();
  const KeyLink* first = nullptr;
  std::set<int> vertices;
  for (const KeyLink& l : links) {
    if (l.key.size() != len) throw InvalidArgument("key length mismatch");
    if (l.a == l.b) throw InvalidArgument("a link needs two distinct vertices");
    vertices.insert(l.a);
    vertices.insert(l.b);
    if (!first && (l.a == alice || l.b == alice)) first = &l;
  }
  if (!first) throw InvalidArgument("Alice shares no pairwise key");

  // Walk outward from Alice: whoever already holds the key announces
  // key XOR link key on each untouched link, and the far end unmasks it.
  ConferenceKey out;
  out.key = first->key;
  out.masks.assign(links.size(), KeyBits{});
  out.reconstructed.emplace(alice, out.key);
  std::vector<bool> announced(links.size(), false);
  std::deque<int> queue{alice};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (announced[i] || (links[i].a != u && links[i].b != u)) continue;
      announced[i] = true;
      out.masks[i] = xor_bits(out.reconstructed.at(u), links[i].key);
      const int w = links[i].a == u ? links[i].b : links[i].a;
      if (!out.reconstructed.contains(w)) {
        out.reconstructed.emplace(w, xor_bits(out.masks[i], links[i].key));
        queue.push_back(w);
      }
    }
  }
  if (out.reconstructed.size() != vertices.size())
    throw InvalidArgument("pairwise links do not connect all participants");
  return out;
}

}  // namespace gsnet
