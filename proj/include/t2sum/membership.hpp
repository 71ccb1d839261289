#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "t2sum/graph.hpp"
#include "t2sum/grid.hpp"

namespace t2sum {

/// Index quadruple (i, i2, j, j2) of the tensor-elementary graph
/// E(i, i2; j, j2), with i < i2 and j < j2.
struct Elementary {
  std::size_t i;
  std::size_t i2;
  std::size_t j;
  std::size_t j2;
  friend auto operator<=>(const Elementary &, const Elementary &) = default;
};

enum class Verdict { member, non_member };

/// Whether a verdict is about one fixed labeling or about every labeling.
enum class Scope { labeled, unlabeled };

enum class WitnessReason {
  odd_edge_count,
  same_row_or_column_edge,
  missing_cross_partner,
  search_exhausted,
  edge_bound_exceeded,
  no_independent_row_partition,
};

std::string_view to_string(Verdict verdict);
std::string_view to_string(Scope scope);
Scope parse_scope(std::string_view text);
std::string_view to_string(WitnessReason reason);
Verdict parse_verdict(std::string_view text);
WitnessReason parse_witness_reason(std::string_view text);

struct Witness {
  WitnessReason reason;
  /// Offending edge, in the input graph's own vertex numbering.
  std::optional<Edge> edge;
};

/// Flag set on member certificates whose decomposition is empty: the
/// edgeless graph is spanning and cross-like, yet an empty 2-sum has no
/// summands at all.
inline constexpr std::string_view kEmptyDecompositionFlag =
    "empty-decomposition";

/// Evidence for a membership verdict. Members carry a labeling and an
/// elementary decomposition that recombines to the input; non-members carry
/// a witness, plus the labeling it refers to when the scope is labeled.
struct Certificate {
  Verdict verdict = Verdict::non_member;
  Scope scope = Scope::labeled;
  std::optional<GridShape> shape;
  std::optional<GridLabeling> labeling;
  std::optional<std::vector<Elementary>> summands;
  std::optional<Witness> witness;
  std::vector<std::string> flags;

  bool is_member() const { return verdict == Verdict::member; }
};

/// Checks that no edge joins two vertices of one grid row or one grid
/// column, and that every edge {(i,j),(i2,j2)} has its partner
/// {(i,j2),(i2,j)}. Vertex v is read through `labeling`.
Certificate check_labeled(const Graph &k, const GridLabeling &labeling);

/// check_labeled under the lexicographic labeling v -> (v / q, v % q).
/// Throws InputError if k does not have p*q vertices.
Certificate is_spanning_cross_like(const Graph &k, GridShape shape);

/// One quadruple per cross pair of edges, sorted. Throws InputError unless
/// k is spanning and cross-like under the labeling.
std::vector<Elementary> elementary_decomposition(const Graph &k,
                                                 const GridLabeling &labeling);
std::vector<Elementary> elementary_decomposition(const Graph &k,
                                                 GridShape shape);

/// XOR of the elementary graphs, with grid cells mapped back to vertices
/// through `labeling`.
Graph recombine(std::span<const Elementary> summands,
                const GridLabeling &labeling);

struct EdgeBound {
  std::size_t bound;
  bool attained;
};

/// 2 * C(p,2) * C(q,2): the edge count of K_p ⊗ K_q.
std::size_t edge_bound(GridShape shape);
EdgeBound edge_bound_check(const Graph &k, GridShape shape);

} // namespace t2sum
