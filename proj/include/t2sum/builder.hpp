#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "t2sum/graph.hpp"
#include "t2sum/grid.hpp"

namespace t2sum {

struct PptConstruction {
  Graph h;
  GridLabeling labeling;
};

/// For g on n >= 2 vertices, builds H on the n x n grid with edges
/// {(i,i),(j,j)} and {(i,j),(j,i)} for every edge {i,j} of g. H is a
/// labeled member of K(n,n) whose components are g (on the diagonal cells),
/// one K2 per edge of g, and isolated vertices.
PptConstruction build_ppt_graph(const Graph &g);

struct ComponentInfo {
  std::size_t order;
  std::size_t edges;
  /// Nonincreasing.
  std::vector<std::size_t> degrees;
  friend auto operator<=>(const ComponentInfo &, const ComponentInfo &) = default;
};

/// Multiset of component invariants, sorted.
using ComponentSummary = std::vector<ComponentInfo>;

ComponentSummary component_summary(const Graph &g);

/// Exact isomorphism test by degree-constrained backtracking.
bool are_isomorphic(const Graph &a, const Graph &b);

/// True iff the components of h are, up to isomorphism, the components of
/// g together with m copies of K2 and n^2 - n - 2m copies of K1, where n and
/// m are the order and size of g.
bool verify_components(const Graph &h, const Graph &g);

} // namespace t2sum
