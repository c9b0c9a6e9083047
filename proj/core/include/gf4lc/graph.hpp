#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf4lc/gf4.hpp"

namespace gf4lc {

inline constexpr int kMaxVertices = kMaxLength;

using Vertex = int;

/// Simple undirected graph on 1..20 vertices; row i holds the neighbourhood of i.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Validates symmetry and the zero diagonal.
  Graph(int n, std::span<const std::uint32_t> rows);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph star(int n);  ///< vertex 0 is the centre
  static Graph cycle(int n);

  int size() const { return n_; }
  std::uint32_t row(Vertex v) const { return adj_[v]; }
  std::uint32_t neighbours(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1; }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }
  std::uint32_t vertex_mask() const { return n_ == 32 ? ~0u : (1u << n_) - 1; }
  int edge_count() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  /// Relabels so that vertex perm[i] of this graph becomes vertex i.
  Graph relabeled(std::span<const std::uint8_t> perm) const;

  friend Graph local_complement(const Graph& g, Vertex v);

  friend bool operator==(const Graph& x, const Graph& y) {
    if (x.n_ != y.n_) return false;
    for (int i = 0; i < x.n_; ++i)
      if (x.adj_[i] != y.adj_[i]) return false;
    return true;
  }

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint32_t, kMaxVertices> adj_{};
};

/// `<n>:<bits>` with the upper triangle in row-major order.
Graph graph_parse(std::string_view text);
std::string graph_format(const Graph& g);

/// Complements the subgraph induced on the neighbourhood of v.
Graph local_complement(const Graph& g, Vertex v);

bool is_connected(const Graph& g);
std::vector<int> degrees(const Graph& g);
int min_degree(const Graph& g);
/// True when every vertex has odd degree.
bool is_anti_eulerian(const Graph& g);

/// All 2^n - 1 graphs obtained by adding vertex n joined to a nonempty subset.
std::vector<Graph> extensions(const Graph& g);
/// Adds vertex n adjacent to subset `mask` of the existing vertices.
Graph extend(const Graph& g, std::uint32_t mask);

/// Appends a vertex joined to every even-degree vertex; empty unless the
/// result is connected and anti-Eulerian.
std::optional<Graph> anti_eulerian_closure(const Graph& g);

/// Disjoint union; vertices of y follow those of x.
Graph disjoint_union(const Graph& x, const Graph& y);

}  // namespace gf4lc
