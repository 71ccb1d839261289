#pragma once

#include <cstddef>

#include "t2sum/bit_matrix.hpp"
#include "t2sum/graph.hpp"

namespace t2sum {

/// n x n bit matrix viewed as a p x p grid of q x q blocks, q = n / p.
/// Block (s1, s2) occupies rows s1*q.. and columns s2*q..
class BlockMatrix {
public:
  /// Throws InputError unless `entries` is square, p >= 1 and p divides n.
  BlockMatrix(BitMatrix entries, std::size_t p);

  std::size_t n() const { return entries_.rows(); }
  std::size_t p() const { return p_; }
  std::size_t q() const { return entries_.rows() / p_; }
  const BitMatrix &entries() const { return entries_; }

  bool block_entry(std::size_t s1, std::size_t s2, std::size_t r1,
                   std::size_t r2) const {
    return entries_.get(s1 * q() + r1, s2 * q() + r2);
  }

  friend bool operator==(const BlockMatrix &, const BlockMatrix &) = default;

private:
  BitMatrix entries_;
  std::size_t p_;
};

/// Transposes each of the p^2 blocks in place; block positions are kept.
BlockMatrix partial_transpose(const BlockMatrix &m);

/// True iff every q x q block is symmetric.
bool blocks_symmetric(const BlockMatrix &m);

/// Combinatorial PPT test: A(k) equals its partial transpose at block grid
/// size p. Throws InputError if p < 2 or p does not divide the order.
bool ppt_test(const Graph &k, std::size_t p);

} // namespace t2sum
