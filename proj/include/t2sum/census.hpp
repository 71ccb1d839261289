#pragma once

#include <cstddef>
#include <functional>
#include <map>

#include "t2sum/graph.hpp"
#include "t2sum/grid.hpp"
#include "t2sum/t2.hpp"

namespace t2sum {

/// Census sizes up to 2^kCensusDeskBits are enumerated without an override.
inline constexpr std::size_t kCensusDeskBits = 20;
inline constexpr std::size_t kCensusMaxBits = 40;

/// Number of labeled spanning cross-like graphs at the shape:
/// 2^(C(p,2) * C(q,2)). Throws ScaleError past 2^40.
std::size_t census_size(GridShape shape);

/// Visits every labeled spanning cross-like graph at the shape (lexicographic
/// labeling) together with its pair matrix, ordered by the pair-matrix bits
/// read row-major as a binary number, first bit most significant. Stops when
/// `visit` returns false. Throws ScaleError past 2^20 unless allow_large.
void for_each_census_member(
    GridShape shape,
    const std::function<bool(const PairMatrix &, const Graph &)> &visit,
    bool allow_large = false);

struct CensusStats {
  std::size_t count = 0;
  std::map<std::size_t, std::size_t> edge_histogram;
  std::map<std::size_t, std::size_t> t2_histogram;
  std::size_t bound = 0;
  std::size_t over_bound = 0;
  std::size_t bound_attained = 0;
  /// Every bound-attaining member equals K_p ⊗ K_q.
  bool attainers_are_complete_product = true;
  std::size_t odd_edge_members = 0;
  /// Elementary summands in the decomposition of K_p ⊗ K_q.
  std::size_t complete_product_elementary_count = 0;
};

CensusStats census_stats(GridShape shape, bool allow_large = false);

} // namespace t2sum
