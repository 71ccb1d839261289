#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <stop_token>

#include "t2sum/graph.hpp"
#include "t2sum/grid.hpp"
#include "t2sum/membership.hpp"

namespace t2sum {

/// Orders up to this bound are searched without an explicit override.
inline constexpr std::size_t kRecognitionDeskScale = 16;
/// Hard ceiling: vertex sets are packed into one 64-bit word.
inline constexpr std::size_t kRecognitionMaxOrder = 64;

class SearchCancelled : public std::runtime_error {
public:
  SearchCancelled() : std::runtime_error("recognition search cancelled") {}
};

struct RecognizeOptions {
  /// Permit p*q above kRecognitionDeskScale (up to kRecognitionMaxOrder).
  bool allow_large = false;
  /// Run the necessary-condition prefilter before searching.
  bool use_prefilter = true;
  /// Polled during the search; a stop request throws SearchCancelled.
  std::stop_token stop;
};

/// Necessary conditions for membership under some labeling. Returns the
/// first failed test, in order: odd edge count, no partition of the vertices
/// into p independent q-sets, more edges than 2*C(p,2)*C(q,2). nullopt if
/// all pass.
std::optional<WitnessReason> prefilter(const Graph &k, GridShape shape);

/// Decides whether some grid labeling makes k spanning and cross-like.
///
/// Labelings are explored vertex by vertex with cells tried in (row, col)
/// order, restricted to the canonical representative of each row/column
/// relabeling class (rows and columns numbered by first appearance). The
/// first complete labeling reached is therefore the lexicographically
/// smallest member labeling overall. Throws InputError if k does not have
/// p*q vertices, ScaleError past the scale contract.
Certificate recognize(const Graph &k, GridShape shape,
                      const RecognizeOptions &options = {});

/// Calls `visit` on every canonical member labeling (one per row/column
/// relabeling class) in lexicographic order until it returns false.
void for_each_member_labeling(
    const Graph &k, GridShape shape,
    const std::function<bool(const GridLabeling &)> &visit,
    const RecognizeOptions &options = {});

} // namespace t2sum
