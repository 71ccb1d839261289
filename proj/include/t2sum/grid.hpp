#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "t2sum/graph.hpp"

namespace t2sum {

/// Factor sizes (p, q) of K(p, q); both at least 2.
class GridShape {
public:
  /// Throws InputError if p < 2 or q < 2.
  GridShape(std::size_t p, std::size_t q);

  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  std::size_t cells() const { return p_ * q_; }
  GridShape transposed() const { return {q_, p_}; }

  friend bool operator==(const GridShape &, const GridShape &) = default;

private:
  std::size_t p_;
  std::size_t q_;
};

struct Cell {
  std::size_t row;
  std::size_t col;
  friend auto operator<=>(const Cell &, const Cell &) = default;
};

/// Bijection from vertices 0..pq-1 to the cells of a p x q grid.
class GridLabeling {
public:
  /// Throws InputError unless `assignment` hits every cell exactly once.
  GridLabeling(GridShape shape, std::vector<Cell> assignment);

  /// Vertex v sits at (v / q, v % q).
  static GridLabeling lexicographic(GridShape shape);

  const GridShape &shape() const { return shape_; }
  const std::vector<Cell> &assignment() const { return assignment_; }
  const Cell &cell(Vertex v) const { return assignment_[v]; }
  Vertex vertex_at(std::size_t row, std::size_t col) const {
    return inverse_[row * shape_.q() + col];
  }

  /// Permutation sending each vertex to its lexicographic grid index
  /// row * q + col.
  std::vector<Vertex> to_grid_order() const;

  friend bool operator==(const GridLabeling &a, const GridLabeling &b) {
    return a.shape_ == b.shape_ && a.assignment_ == b.assignment_;
  }

private:
  GridShape shape_;
  std::vector<Cell> assignment_;
  std::vector<Vertex> inverse_;
};

/// Index of the unordered pair {a, b}, a < b, among the C(n, 2) pairs of
/// 0..n-1 ordered lexicographically: {0,1}, {0,2}, ..., {1,2}, ...
std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b);
/// Inverse of pair_index.
std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index);

inline constexpr std::size_t choose2(std::size_t n) {
  return n * (n > 0 ? n - 1 : 0) / 2;
}

} // namespace t2sum
