#include "t2sum/census.hpp"

#include <string>

#include "t2sum/algebra.hpp"
#include "t2sum/error.hpp"
#include "t2sum/membership.hpp"

namespace t2sum {

namespace {

std::size_t census_bits(GridShape shape) {
  return choose2(shape.p()) * choose2(shape.q());
}

} // namespace

std::size_t census_size(GridShape shape) {
  const std::size_t bits = census_bits(shape);
  if (bits > kCensusMaxBits)
    throw ScaleError("census at this shape has 2^" + std::to_string(bits) +
                     " members");
  return std::size_t{1} << bits;
}

void for_each_census_member(
    GridShape shape,
    const std::function<bool(const PairMatrix &, const Graph &)> &visit,
    bool allow_large) {
  const std::size_t bits = census_bits(shape);
  const std::size_t total = census_size(shape);
  if (bits > kCensusDeskBits && !allow_large)
    throw ScaleError("census at this shape has 2^" + std::to_string(bits) +
                     " members; pass the large override to enumerate it");
  const std::size_t cols = choose2(shape.q());
  for (std::size_t code = 0; code < total; ++code) {
    PairMatrix m(shape);
    for (std::size_t pos = 0; pos < bits; ++pos)
      if ((code >> (bits - 1 - pos)) & 1u)
        m.bits.set(pos / cols, pos % cols);
    if (!visit(m, member_from_pair_matrix(m)))
      return;
  }
}

CensusStats census_stats(GridShape shape, bool allow_large) {
  CensusStats stats;
  stats.bound = edge_bound(shape);
  const Graph complete_product =
      tensor_product(standard_graph(StandardKind::complete, shape.p()),
                     standard_graph(StandardKind::complete, shape.q()));
  stats.complete_product_elementary_count =
      elementary_decomposition(complete_product, shape).size();
  for_each_census_member(
      shape,
      [&](const PairMatrix &m, const Graph &k) {
        const std::size_t edges = k.edge_count();
        ++stats.count;
        ++stats.edge_histogram[edges];
        ++stats.t2_histogram[t2_of_pair_matrix(m)];
        if (edges > stats.bound)
          ++stats.over_bound;
        if (edges == stats.bound) {
          ++stats.bound_attained;
          stats.attainers_are_complete_product =
              stats.attainers_are_complete_product && k == complete_product;
        }
        if (edges % 2 != 0)
          ++stats.odd_edge_members;
        return true;
      },
      allow_large);
  return stats;
}

} // namespace t2sum
