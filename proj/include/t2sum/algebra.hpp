#pragma once

#include <cstddef>
#include <span>

#include "t2sum/graph.hpp"

namespace t2sum {

/// One G_k ⊗ H_k term of a tensor 2-sum.
struct TensorSummand {
  Graph g;
  Graph h;
};

/// Tensor (direct) product. Vertex (i, j) of the result is i * q + j, so the
/// adjacency matrix is the Kronecker product of the factors' matrices.
Graph tensor_product(const Graph &g, const Graph &h);

/// 2-sum: XOR of adjacency matrices. Throws InputError on order mismatch.
Graph two_sum(const Graph &g, const Graph &h);

/// E(i, i2; j, j2): product of the single-edge graphs {i, i2} on p vertices
/// and {j, j2} on q vertices. Requires i < i2 < p and j < j2 < q.
Graph tensor_elementary(std::size_t p, std::size_t q, std::size_t i,
                        std::size_t i2, std::size_t j, std::size_t j2);

/// XOR of the products of all summands. The list must be non-empty, every
/// factor must have an edge, and all summands must share one (p, q).
Graph tensor_2sum(std::span<const TensorSummand> summands);

} // namespace t2sum
