#include "gsnet/router/orbit.hpp"

#include <algorithm>
#include <string>

#include "gsnet/core/errors.hpp"

namespace gsnet {

LcOrbit::LcOrbit(const Graph& g, std::size_t max_members) {
  if (g.active_count() > kMaxVertices)
    throw CapExceeded("orbit enumeration limited to 12 vertices, graph has " +
                      std::to_string(g.active_count()));
  const std::vector<int> vs = g.vertices();
  members_.push_back(g);
  parent_.push_back(0);
  via_.push_back(-1);
  depth_.push_back(0);
  index_.emplace(g, 0);
  for (std::size_t head = 0; head < members_.size(); ++head) {
    for (int v : vs) {
      Graph next = members_[head];
      next.local_complement(v);
      if (index_.contains(next)) continue;
      if (members_.size() >= max_members)
        throw CapExceeded("orbit exceeds " + std::to_string(max_members) + " members");
      index_.emplace(next, static_cast<std::uint32_t>(members_.size()));
      members_.push_back(std::move(next));
      parent_.push_back(static_cast<std::uint32_t>(head));
      via_.push_back(static_cast<std::int8_t>(v));
      depth_.push_back(static_cast<std::uint16_t>(depth_[head] + 1));
    }
  }
}

std::optional<std::size_t> LcOrbit::find(const Graph& g) const {
  const auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> LcOrbit::sequence_to(std::size_t i) const {
  std::vector<int> seq;
  while (i != 0) {
    seq.push_back(via_.at(i));
    i = parent_[i];
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

std::vector<Graph> lc_orbit(const Graph& g, std::size_t max_members) {
  return LcOrbit(g, max_members).members();
}

}  // namespace gsnet
