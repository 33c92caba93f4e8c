#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gsnet {

using VertexMask = std::uint32_t;

/// Simple undirected graph on up to 24 labelled vertex slots.
///
/// Vertices keep their label after removal of other vertices; a removed vertex
/// becomes inactive and loses its edges.
class Graph {
 public:
  static constexpr int kMaxVertices = 24;

  Graph() = default;
  /// n active vertices labelled 0..n-1, no edges. Throws InvalidArgument unless 1 <= n <= 24.
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const noexcept { return n_; }
  VertexMask active_mask() const noexcept { return active_; }
  bool active(int v) const noexcept;
  int active_count() const noexcept;
  std::vector<int> vertices() const;

  VertexMask neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  std::size_t edge_count() const;

  /// Throws InvalidArgument on a self-loop, inactive endpoint or existing edge.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);
  void remove_vertex(int v);
  /// Complement the subgraph induced on the neighbourhood of v.
  void local_complement(int v);

  /// Induced subgraph on the given active vertices, labels kept.
  Graph induced(VertexMask keep) const;
  bool connected() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(int v) const;

  int n_ = 0;
  VertexMask active_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept { return g.hash(); }
};

inline VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace gsnet
