#pragma once

#include <string>
#include <string_view>

#include "t2sum/graph.hpp"

namespace t2sum {

/// Largest order representable in the short graph6 header.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Short-form graph6: one header byte n+63, then the upper triangle read
/// column by column, six bits per printable byte. Throws InputError when
/// n > 62.
std::string graph6_encode(const Graph &g);

/// Accepts an optional ">>graph6<<" prefix and trailing newline. Throws
/// InputError on a bad header, wrong body length, a byte outside 63..126, or
/// nonzero padding bits.
Graph graph6_decode(std::string_view text);

/// "n\nu v\n..." with 0-indexed endpoints, one edge per line.
std::string edge_list_encode(const Graph &g);
Graph edge_list_decode(std::string_view text);

/// n lines of n characters '0'/'1'.
std::string matrix_encode(const BitMatrix &m);
BitMatrix matrix_decode(std::string_view text);

enum class GraphFormat { automatic, graph6, edge_list, matrix };

GraphFormat parse_graph_format(std::string_view name);

/// Decodes `text` in the given format. `automatic` picks graph6 for a single
/// token of printable graph6 bytes, matrix when every line is a 0/1 string
/// as long as the line count (and there are at least two lines), and the
/// edge list otherwise.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);

} // namespace t2sum
