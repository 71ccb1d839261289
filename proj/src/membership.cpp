#include "t2sum/membership.hpp"

#include <string>

#include "t2sum/algebra.hpp"
#include "t2sum/error.hpp"

namespace t2sum {

namespace {

void require_order(const Graph &k, GridShape shape) {
  if (k.order() != shape.cells())
    throw InputError("graph has " + std::to_string(k.order()) +
                     " vertices, shape (" + std::to_string(shape.p()) + "," +
                     std::to_string(shape.q()) + ") needs " +
                     std::to_string(shape.cells()));
}

} // namespace

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::member ? "member" : "non-member";
}

std::string_view to_string(WitnessReason reason) {
  switch (reason) {
  case WitnessReason::odd_edge_count:
    return "odd-edge-count";
  case WitnessReason::same_row_or_column_edge:
    return "same-row-or-column-edge";
  case WitnessReason::missing_cross_partner:
    return "missing-cross-partner";
  case WitnessReason::search_exhausted:
    return "search-exhausted";
  case WitnessReason::edge_bound_exceeded:
    return "edge-bound-exceeded";
  case WitnessReason::no_independent_row_partition:
    return "no-independent-row-partition";
  }
  return "unknown";
}

std::string_view to_string(Scope scope) {
  return scope == Scope::labeled ? "labeled" : "unlabeled";
}

Scope parse_scope(std::string_view text) {
  if (text == "labeled")
    return Scope::labeled;
  if (text == "unlabeled")
    return Scope::unlabeled;
  throw InputError("unknown scope '" + std::string(text) + "'");
}

Verdict parse_verdict(std::string_view text) {
  if (text == "member")
    return Verdict::member;
  if (text == "non-member")
    return Verdict::non_member;
  throw InputError("unknown verdict '" + std::string(text) + "'");
}

WitnessReason parse_witness_reason(std::string_view text) {
  for (auto reason :
       {WitnessReason::odd_edge_count, WitnessReason::same_row_or_column_edge,
        WitnessReason::missing_cross_partner, WitnessReason::search_exhausted,
        WitnessReason::edge_bound_exceeded,
        WitnessReason::no_independent_row_partition})
    if (to_string(reason) == text)
      return reason;
  throw InputError("unknown witness reason '" + std::string(text) + "'");
}

Certificate check_labeled(const Graph &k, const GridLabeling &labeling) {
  require_order(k, labeling.shape());
  Certificate cert;
  cert.shape = labeling.shape();
  cert.labeling = labeling;
  for (const auto &[u, v] : k.edges()) {
    const Cell &cu = labeling.cell(u);
    const Cell &cv = labeling.cell(v);
    if (cu.row == cv.row || cu.col == cv.col) {
      cert.witness = Witness{WitnessReason::same_row_or_column_edge, Edge{u, v}};
      return cert;
    }
    const Vertex x = labeling.vertex_at(cu.row, cv.col);
    const Vertex y = labeling.vertex_at(cv.row, cu.col);
    if (!k.has_edge(x, y)) {
      cert.witness = Witness{WitnessReason::missing_cross_partner, Edge{u, v}};
      return cert;
    }
  }
  cert.verdict = Verdict::member;
  cert.summands = elementary_decomposition(k, labeling);
  if (cert.summands->empty())
    cert.flags.emplace_back(kEmptyDecompositionFlag);
  return cert;
}

Certificate is_spanning_cross_like(const Graph &k, GridShape shape) {
  require_order(k, shape);
  return check_labeled(k, GridLabeling::lexicographic(shape));
}

std::vector<Elementary> elementary_decomposition(const Graph &k,
                                                 const GridLabeling &labeling) {
  require_order(k, labeling.shape());
  const std::size_t p = labeling.shape().p();
  const std::size_t q = labeling.shape().q();
  std::vector<Elementary> out;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t i2 = i + 1; i2 < p; ++i2)
      for (std::size_t j = 0; j < q; ++j)
        for (std::size_t j2 = j + 1; j2 < q; ++j2) {
          const bool main = k.has_edge(labeling.vertex_at(i, j),
                                       labeling.vertex_at(i2, j2));
          const bool partner = k.has_edge(labeling.vertex_at(i, j2),
                                          labeling.vertex_at(i2, j));
          if (main != partner)
            throw InputError("graph is not cross-like: pair (" +
                             std::to_string(i) + "," + std::to_string(i2) +
                             ";" + std::to_string(j) + "," +
                             std::to_string(j2) + ") is half present");
          if (main) {
            out.push_back({i, i2, j, j2});
            covered += 2;
          }
        }
  if (covered != k.edge_count())
    throw InputError("graph is not a spanning subgraph of K_p x K_q: it has "
                     "an edge inside a grid row or column");
  return out;
}

std::vector<Elementary> elementary_decomposition(const Graph &k,
                                                 GridShape shape) {
  require_order(k, shape);
  return elementary_decomposition(k, GridLabeling::lexicographic(shape));
}

Graph recombine(std::span<const Elementary> summands,
                const GridLabeling &labeling) {
  const GridShape shape = labeling.shape();
  Graph grid(shape.cells());
  for (const auto &e : summands)
    grid ^= tensor_elementary(shape.p(), shape.q(), e.i, e.i2, e.j, e.j2);
  // grid vertex row * q + col belongs to labeling.vertex_at(row, col)
  std::vector<Vertex> back(shape.cells());
  for (std::size_t cell = 0; cell < shape.cells(); ++cell)
    back[cell] = labeling.vertex_at(cell / shape.q(), cell % shape.q());
  return grid.relabeled(back);
}

std::size_t edge_bound(GridShape shape) {
  return 2 * choose2(shape.p()) * choose2(shape.q());
}

EdgeBound edge_bound_check(const Graph &k, GridShape shape) {
  require_order(k, shape);
  const std::size_t bound = edge_bound(shape);
  return {bound, k.edge_count() == bound};
}

} // namespace t2sum
