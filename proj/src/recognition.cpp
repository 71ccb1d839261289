#include "t2sum/recognition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "t2sum/error.hpp"

namespace t2sum {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);
constexpr std::size_t kStopPollInterval = 4096;

Mask bit(std::size_t v) { return Mask{1} << v; }

Mask all_vertices(std::size_t n) {
  return n == 64 ? ~Mask{0} : bit(n) - 1;
}

std::vector<Mask> adjacency_masks(const Graph &k) {
  std::vector<Mask> masks(k.order(), 0);
  for (const auto &[u, v] : k.edges()) {
    masks[u] |= bit(v);
    masks[v] |= bit(u);
  }
  return masks;
}

/// Exact cover of the vertex set by independent sets of size `size`.
class RowPartitioner {
public:
  RowPartitioner(const std::vector<Mask> &adj, std::size_t size)
      : adj_(adj), size_(size), full_(all_vertices(adj.size())) {}

  bool feasible() { return cover(0); }

private:
  bool cover(Mask used) {
    if (used == full_)
      return true;
    const auto anchor = static_cast<std::size_t>(std::countr_zero(~used));
    const Mask candidates = ~used & full_ & ~adj_[anchor] & ~(bit(anchor + 1) - 1);
    return extend(used | bit(anchor), candidates, size_ - 1);
  }

  bool extend(Mask used, Mask candidates, std::size_t remaining) {
    if (remaining == 0)
      return cover(used);
    if (static_cast<std::size_t>(std::popcount(candidates)) < remaining)
      return false;
    while (candidates != 0) {
      const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      if (extend(used | bit(v), candidates & ~adj_[v], remaining - 1))
        return true;
    }
    return false;
  }

  const std::vector<Mask> &adj_;
  std::size_t size_;
  Mask full_;
};

class LabelingSearch {
public:
  using Visitor = std::function<bool(const GridLabeling &)>;

  LabelingSearch(const Graph &k, GridShape shape, std::stop_token stop)
      : k_(k), shape_(shape), stop_(std::move(stop)),
        cell_of_(k.order(), Cell{kUnplaced, kUnplaced}),
        occupant_(shape.cells(), kUnplaced), row_fill_(shape.p(), 0),
        col_fill_(shape.q(), 0) {}

  std::optional<GridLabeling> first() {
    std::optional<GridLabeling> found;
    visit_ = [&found](const GridLabeling &labeling) {
      found = labeling;
      return false;
    };
    place(0);
    return found;
  }

  void each(Visitor visit) {
    visit_ = std::move(visit);
    place(0);
  }

private:
  // Returns true once the visitor asks to stop.
  bool place(Vertex v) {
    if (v == k_.order())
      return !visit_(GridLabeling(shape_, cell_of_));
    if (nodes_++ % kStopPollInterval == 0 && stop_.stop_requested())
      throw SearchCancelled();
    const std::size_t row_limit = std::min(rows_open_ + 1, shape_.p());
    const std::size_t col_limit = std::min(cols_open_ + 1, shape_.q());
    for (std::size_t r = 0; r < row_limit; ++r) {
      if (row_fill_[r] == shape_.q())
        continue;
      for (std::size_t c = 0; c < col_limit; ++c) {
        if (col_fill_[c] == shape_.p() || occupant(r, c) != kUnplaced)
          continue;
        if (!consistent(v, r, c))
          continue;
        assign(v, r, c);
        const std::size_t saved_rows = rows_open_;
        const std::size_t saved_cols = cols_open_;
        rows_open_ = std::max(rows_open_, r + 1);
        cols_open_ = std::max(cols_open_, c + 1);
        if (place(v + 1))
          return true;
        rows_open_ = saved_rows;
        cols_open_ = saved_cols;
        unassign(v, r, c);
      }
    }
    return false;
  }

  // Every constraint whose last vertex is v, given v lands on (r, c).
  bool consistent(Vertex v, std::size_t r, std::size_t c) const {
    for (Vertex u = 0; u < v; ++u) {
      const Cell cu = cell_of_[u];
      const bool adjacent = k_.has_edge(u, v);
      if (cu.row == r || cu.col == c) {
        if (adjacent)
          return false;
        continue;
      }
      const Vertex x = occupant(cu.row, c);
      const Vertex y = occupant(r, cu.col);
      if (x != kUnplaced && y != kUnplaced && k_.has_edge(x, y) != adjacent)
        return false;
    }
    return true;
  }

  Vertex occupant(std::size_t r, std::size_t c) const {
    return occupant_[r * shape_.q() + c];
  }
  void assign(Vertex v, std::size_t r, std::size_t c) {
    cell_of_[v] = {r, c};
    occupant_[r * shape_.q() + c] = v;
    ++row_fill_[r];
    ++col_fill_[c];
  }
  void unassign(Vertex v, std::size_t r, std::size_t c) {
    cell_of_[v] = {kUnplaced, kUnplaced};
    occupant_[r * shape_.q() + c] = kUnplaced;
    --row_fill_[r];
    --col_fill_[c];
  }

  const Graph &k_;
  GridShape shape_;
  std::stop_token stop_;
  std::vector<Cell> cell_of_;
  std::vector<Vertex> occupant_;
  std::vector<std::size_t> row_fill_;
  std::vector<std::size_t> col_fill_;
  std::size_t rows_open_ = 0;
  std::size_t cols_open_ = 0;
  std::size_t nodes_ = 0;
  Visitor visit_;
};

void check_scale(const Graph &k, GridShape shape, bool allow_large) {
  if (k.order() != shape.cells())
    throw InputError("graph has " + std::to_string(k.order()) +
                     " vertices, shape (" + std::to_string(shape.p()) + "," +
                     std::to_string(shape.q()) + ") needs " +
                     std::to_string(shape.cells()));
  if (k.order() > kRecognitionMaxOrder)
    throw ScaleError("recognition supports at most 64 vertices");
  if (k.order() > kRecognitionDeskScale && !allow_large)
    throw ScaleError("p*q = " + std::to_string(k.order()) +
                     " exceeds the exact-search scale of 16; pass the large "
                     "override to search anyway");
}

} // namespace

std::optional<WitnessReason> prefilter(const Graph &k, GridShape shape) {
  const std::size_t edges = k.edge_count();
  if (edges % 2 != 0)
    return WitnessReason::odd_edge_count;
  if (k.order() == shape.cells() && k.order() <= kRecognitionMaxOrder) {
    const auto adj = adjacency_masks(k);
    if (!RowPartitioner(adj, shape.q()).feasible())
      return WitnessReason::no_independent_row_partition;
  }
  if (edges > edge_bound(shape))
    return WitnessReason::edge_bound_exceeded;
  return std::nullopt;
}

Certificate recognize(const Graph &k, GridShape shape,
                      const RecognizeOptions &options) {
  check_scale(k, shape, options.allow_large);
  if (const auto reason = options.use_prefilter ? prefilter(k, shape) : std::nullopt) {
    Certificate cert;
    cert.scope = Scope::unlabeled;
    cert.shape = shape;
    cert.witness = Witness{*reason, std::nullopt};
    return cert;
  }
  auto labeling = LabelingSearch(k, shape, options.stop).first();
  if (!labeling) {
    Certificate cert;
    cert.scope = Scope::unlabeled;
    cert.shape = shape;
    cert.witness = Witness{WitnessReason::search_exhausted, std::nullopt};
    return cert;
  }
  Certificate cert = check_labeled(k, *labeling);
  cert.scope = Scope::unlabeled;
  return cert;
}

void for_each_member_labeling(
    const Graph &k, GridShape shape,
    const std::function<bool(const GridLabeling &)> &visit,
    const RecognizeOptions &options) {
  check_scale(k, shape, options.allow_large);
  if (options.use_prefilter && prefilter(k, shape))
    return;
  LabelingSearch(k, shape, options.stop).each(visit);
}

} // namespace t2sum
