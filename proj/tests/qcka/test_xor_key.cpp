#include <doctest.h>

#include "gsnet/core/errors.hpp"
#include "gsnet/qcka/xor_key.hpp"

using namespace gsnet;

namespace {

KeyBits bits4(unsigned v) { return {std::uint8_t(v >> 3 & 1), std::uint8_t(v >> 2 & 1), std::uint8_t(v >> 1 & 1), std::uint8_t(v & 1)}; }

// Every participant reaches the reference key through masks along the link graph.
void check_all_keys(const std::vector<std::pair<int, int>>& topology, int alice) {
  const std::size_t m = topology.size();
  const unsigned combos = 1U << (4 * m);
  for (unsigned code = 0; code < combos; ++code) {
    std::vector<KeyLink> links;
    for (std::size_t i = 0; i < m; ++i)
      links.push_back({topology[i].first, topology[i].second, bits4(code >> (4 * i) & 0xF)});
    const auto ck = xor_combine(links, alice);
    REQUIRE(ck.masks.size() == m);
    for (std::size_t i = 0; i < m; ++i) CHECK(xor_bits(ck.masks[i], links[i].key) == ck.key);
    for (const auto& [v, k] : ck.reconstructed) CHECK(k == ck.key);
    for (const auto& [a, b] : topology) {
      CHECK(ck.reconstructed.contains(a));
      CHECK(ck.reconstructed.contains(b));
    }
  }
}

}  // namespace

TEST_CASE("xor of key strings") {
  CHECK(xor_bits(bits4(0b1010), bits4(0b1010)) == bits4(0));
  CHECK(xor_bits(bits4(0b1010), bits4(0b0110)) == bits4(0b1100));
  CHECK_THROWS_AS(xor_bits({1}, {1, 0}), InvalidArgument);
}

TEST_CASE("conference keys on router topologies, all 4-bit keys") {
  check_all_keys({{0, 1}, {4, 5}, {1, 4}}, 0);  // two-copy schedule on the six-vertex network
  check_all_keys({{0, 2}, {3, 5}, {0, 5}}, 0);  // ring schedule, spanning subset
  check_all_keys({{0, 1}, {4, 5}, {1, 4}}, 5);
}

TEST_CASE("xor_combine errors") {
  CHECK_THROWS_AS(xor_combine({}, 0), InvalidArgument);
  CHECK_THROWS_AS(xor_combine({{0, 1, {1}}, {2, 3, {0}}}, 0), InvalidArgument);
  CHECK_THROWS_AS(xor_combine({{0, 1, {1}}}, 7), InvalidArgument);
  CHECK_THROWS_AS(xor_combine({{0, 1, {1}}, {1, 2, {0, 1}}}, 0), InvalidArgument);
}
