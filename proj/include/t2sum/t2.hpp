#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "t2sum/algebra.hpp"
#include "t2sum/bit_matrix.hpp"
#include "t2sum/graph.hpp"
#include "t2sum/grid.hpp"
#include "t2sum/recognition.hpp"

namespace t2sum {

/// C(p,2) x C(q,2) matrix over GF(2): bit ({i,i2}, {j,j2}) is set iff the
/// cross pair {(i,j),(i2,j2)}, {(i,j2),(i2,j)} is present. Row and column
/// pairs are numbered by pair_index.
struct PairMatrix {
  GridShape shape;
  BitMatrix bits;

  explicit PairMatrix(GridShape s)
      : shape(s), bits(choose2(s.p()), choose2(s.q())) {}

  friend bool operator==(const PairMatrix &, const PairMatrix &) = default;
};

/// Throws InputError unless k is spanning and cross-like under the labeling.
PairMatrix pair_matrix(const Graph &k, const GridLabeling &labeling);
PairMatrix pair_matrix(const Graph &k, GridShape shape);

/// The labeled member (lexicographic labeling) whose pair matrix is `m`.
Graph member_from_pair_matrix(const PairMatrix &m);

/// Rank over GF(2).
std::size_t gf2_rank(const BitMatrix &m);

/// Minimal number of tensor products whose 2-sum is the labeled member k:
/// the GF(2) rank of its pair matrix, or 2 for the edgeless graph. Throws
/// InputError on non-members.
std::size_t t2_exact(const Graph &k, const GridLabeling &labeling);
std::size_t t2_exact(const Graph &k, GridShape shape);
std::size_t t2_of_pair_matrix(const PairMatrix &m);

/// A representation of the labeled member with exactly t2_exact summands,
/// factors on p and q vertices in grid numbering. Built from a GF(2) rank
/// factorization: each rank-one term u v^T becomes (G_u, H_v) where G_u has
/// the row pairs in u as edges and H_v the column pairs in v.
std::vector<TensorSummand> t2_decomposition(const PairMatrix &m);

/// Upper limit on C(p,2) + C(q,2) for the brute-force oracle.
inline constexpr std::size_t kOracleMaxPairs = 12;

/// Exhaustive iterative-deepening search for the fewest products
/// G ⊗ H (both nontrivial, factors enumerated as all nonempty edge sets)
/// whose 2-sum equals k read in lexicographic grid order. Works on graphs
/// directly; shares no code with the rank route. Returns nullopt if no
/// representation uses at most max_l summands. Throws ScaleError when
/// C(p,2) + C(q,2) > 12.
std::optional<std::size_t> t2_bruteforce_oracle(const Graph &k,
                                                GridShape shape,
                                                std::size_t max_l);

struct LabelingT2 {
  std::size_t t2;
  GridLabeling labeling;
};

/// Smallest t2_exact over every member labeling of the unlabeled graph, with
/// the first labeling attaining it; nullopt for non-members.
std::optional<LabelingT2> t2_min_over_labelings(const Graph &k, GridShape shape,
                                                const RecognizeOptions &options = {});

} // namespace t2sum
