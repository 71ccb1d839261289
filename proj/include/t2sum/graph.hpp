#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "t2sum/bit_matrix.hpp"

namespace t2sum {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a symmetric BitMatrix with zero diagonal; every constructor
/// and mutator keeps both properties, so `edge_count()` is exactly half the
/// number of set bits.
class Graph {
public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n, n) {}

  /// Throws InputError on out-of-range endpoints or self-loops. Duplicate
  /// pairs, in either orientation, collapse to one edge.
  static Graph from_edges(std::size_t n, const std::vector<Edge> &edges);

  /// Throws InputError unless `m` is square, symmetric and zero on the
  /// diagonal.
  static Graph from_adjacency(BitMatrix m);

  std::size_t order() const { return adj_.rows(); }
  std::size_t edge_count() const { return adj_.popcount() / 2; }
  bool empty_of_edges() const { return adj_.is_zero(); }

  bool has_edge(Vertex u, Vertex v) const { return adj_.get(u, v); }
  std::size_t degree(Vertex v) const { return adj_.row_popcount(v); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  const BitMatrix &adjacency() const { return adj_; }

  /// The graph obtained by sending vertex v to `perm[v]`.
  Graph relabeled(const std::vector<Vertex> &perm) const;
  /// The subgraph induced on `vertices`, renumbered in the given order.
  Graph induced(const std::vector<Vertex> &vertices) const;

  Graph &operator^=(const Graph &other);

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  void check_pair(Vertex u, Vertex v) const;

  BitMatrix adj_;
};

enum class StandardKind { complete, path, cycle, edgeless };

/// Parses "complete" | "path" | "cycle" | "edgeless"; throws InputError.
StandardKind parse_standard_kind(std::string_view name);

/// Named graph on 0..n-1 with consecutive labeling. Requires n >= 1, and
/// n >= 3 for cycles.
Graph standard_graph(StandardKind kind, std::size_t n);

/// Parts are laid out in input order with running vertex offsets.
Graph disjoint_union(const std::vector<Graph> &parts);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph &g);

struct GraphHash {
  std::size_t operator()(const Graph &g) const noexcept;
};

} // namespace t2sum
