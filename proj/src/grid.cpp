#include "t2sum/grid.hpp"

#include <limits>
#include <string>

#include "t2sum/error.hpp"

namespace t2sum {

GridShape::GridShape(std::size_t p, std::size_t q) : p_(p), q_(q) {
  if (p < 2 || q < 2)
    throw InputError("grid shape needs p >= 2 and q >= 2, got (" +
                     std::to_string(p) + "," + std::to_string(q) + ")");
}

GridLabeling::GridLabeling(GridShape shape, std::vector<Cell> assignment)
    : shape_(shape), assignment_(std::move(assignment)),
      inverse_(shape.cells(), std::numeric_limits<Vertex>::max()) {
  if (assignment_.size() != shape_.cells())
    throw InputError("labeling covers " + std::to_string(assignment_.size()) +
                     " vertices, grid has " + std::to_string(shape_.cells()));
  for (Vertex v = 0; v < assignment_.size(); ++v) {
    const auto [row, col] = assignment_[v];
    if (row >= shape_.p() || col >= shape_.q())
      throw InputError("labeling sends vertex " + std::to_string(v) +
                       " outside the grid");
    Vertex &slot = inverse_[row * shape_.q() + col];
    if (slot != std::numeric_limits<Vertex>::max())
      throw InputError("labeling is not a bijection: cell (" +
                       std::to_string(row) + "," + std::to_string(col) +
                       ") used twice");
    slot = v;
  }
}

GridLabeling GridLabeling::lexicographic(GridShape shape) {
  std::vector<Cell> cells;
  cells.reserve(shape.cells());
  for (std::size_t v = 0; v < shape.cells(); ++v)
    cells.push_back({v / shape.q(), v % shape.q()});
  return {shape, std::move(cells)};
}

std::vector<Vertex> GridLabeling::to_grid_order() const {
  std::vector<Vertex> perm(assignment_.size());
  for (Vertex v = 0; v < assignment_.size(); ++v)
    perm[v] = assignment_[v].row * shape_.q() + assignment_[v].col;
  return perm;
}

std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
  // pairs starting below a: (n-1) + (n-2) + ... + (n-a)
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index) {
  std::size_t a = 0;
  while (index >= n - a - 1) {
    index -= n - a - 1;
    ++a;
  }
  return {a, a + 1 + index};
}

} // namespace t2sum
