#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gsnet/core/graph.hpp"

namespace gsnet {

/// Breadth-first closure of a labelled graph under local complementation.
///
/// Members are stored in discovery order. LC is tried at vertices in increasing
/// label order, so sequence_to(i) is the shortest LC sequence reaching member i and,
/// among shortest ones, the lexicographically smallest.
class LcOrbit {
 public:
  static constexpr int kMaxVertices = 12;
  static constexpr std::size_t kDefaultMaxMembers = 2'000'000;

  /// Throws CapExceeded when the graph has more than 12 active vertices or the
  /// orbit outgrows max_members.
  explicit LcOrbit(const Graph& g, std::size_t max_members = kDefaultMaxMembers);

  std::size_t size() const noexcept { return members_.size(); }
  const Graph& member(std::size_t i) const { return members_.at(i); }
  const std::vector<Graph>& members() const noexcept { return members_; }
  std::optional<std::size_t> find(const Graph& g) const;
  int depth(std::size_t i) const { return depth_.at(i); }
  std::vector<int> sequence_to(std::size_t i) const;

 private:
  std::vector<Graph> members_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::int8_t> via_;
  std::vector<std::uint16_t> depth_;
  std::unordered_map<Graph, std::uint32_t, GraphHash> index_;
};

std::vector<Graph> lc_orbit(const Graph& g, std::size_t max_members = LcOrbit::kDefaultMaxMembers);

}  // namespace gsnet
