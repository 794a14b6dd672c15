#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace efsub {

// Vertex cap for the exact game solvers; keeps position encodings word-sized.
inline constexpr int kSolverVertexCap = 64;

// Finite simple undirected graph over vertex indices 0..n-1.
// Adjacency is a symmetric irreflexive bit matrix. Immutable once built
// (add_edge is a construction-time operation); all queries are pure, so
// graphs can be shared freely across concurrent solver queries.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const;

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    check(u);
    check(v);
    return bit(u, v);
  }

  int degree(int v) const;
  int max_degree() const;
  std::vector<int> neighborhood(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph on the given vertices, preserving their relative order.
  Graph induced(const std::vector<int>& vertices) const;

  // Graph on n-1 vertices with indices above v shifted down by one.
  Graph remove_vertex(int v) const;

  // The empty graph counts as connected.
  bool is_connected() const;

  // Vertex sets of connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<int>> components() const;

  Graph disjoint_union(const Graph& other) const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;

  bool bit(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void set_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
  void check(int v) const;
};

}  // namespace efsub
