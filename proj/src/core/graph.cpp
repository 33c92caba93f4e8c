#include "gsnet/core/graph.hpp"

#include <bit>
#include <string>

#include "gsnet/core/errors.hpp"

namespace gsnet {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw InvalidArgument("vertex count must be in 1..24, got " + std::to_string(n));
  active_ = (VertexMask{1} << n) - 1;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

bool Graph::active(int v) const noexcept {
  return v >= 0 && v < n_ && (active_ & bit(v)) != 0;
}

int Graph::active_count() const noexcept { return std::popcount(active_); }

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (active(v)) out.push_back(v);
  return out;
}

void Graph::check(int v) const {
  if (!active(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
}

VertexMask Graph::neighbors(int v) const {
  check(v);
  return adj_[v];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

bool Graph::has_edge(int u, int v) const {
  check(u);
  check(v);
  return (adj_[u] & bit(v)) != 0;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    VertexMask m = adj_[u] & ~((bit(u) << 1) - 1);
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t deg = 0;
  for (int u = 0; u < n_; ++u) deg += std::popcount(adj_[u]);
  return deg / 2;
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw InvalidArgument("self-loop on vertex " + std::to_string(u));
  if (adj_[u] & bit(v))
    throw InvalidArgument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  toggle_edge(u, v);
}

void Graph::remove_edge(int u, int v) {
  if (has_edge(u, v)) toggle_edge(u, v);
}

void Graph::toggle_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw InvalidArgument("self-loop on vertex " + std::to_string(u));
  adj_[u] ^= bit(v);
  adj_[v] ^= bit(u);
}

void Graph::remove_vertex(int v) {
  check(v);
  VertexMask m = adj_[v];
  while (m) {
    const int u = std::countr_zero(m);
    m &= m - 1;
    adj_[u] &= ~bit(v);
  }
  adj_[v] = 0;
  active_ &= ~bit(v);
}

void Graph::local_complement(int v) {
  const VertexMask nb = neighbors(v);
  VertexMask m = nb;
  while (m) {
    const int u = std::countr_zero(m);
    m &= m - 1;
    adj_[u] ^= nb & ~bit(u);
  }
}

Graph Graph::induced(VertexMask keep) const {
  if (keep & ~active_) throw InvalidArgument("induced subgraph names inactive vertices");
  Graph g = *this;
  for (int v = 0; v < n_; ++v)
    if (g.active(v) && !(keep & bit(v))) g.remove_vertex(v);
  return g;
}

bool Graph::connected() const {
  if (active_ == 0) return true;
  VertexMask seen = bit(std::countr_zero(active_));
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    while (frontier) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj_[u];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == active_;
}

std::size_t Graph::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(active_);
  for (int v = 0; v < n_; ++v) mix(adj_[v]);
  return static_cast<std::size_t>(h);
}

}  // namespace gsnet
