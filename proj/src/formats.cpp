#include "t2sum/formats.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "t2sum/error.hpp"

namespace t2sum {

namespace {

constexpr int kGraph6Bias = 63;
constexpr char kGraph6Max = 126;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> nonempty_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto cut = text.find('\n');
    std::string_view line = trim(text.substr(0, cut));
    if (!line.empty())
      lines.push_back(line);
    if (cut == std::string_view::npos)
      break;
    text.remove_prefix(cut + 1);
  }
  return lines;
}

bool is_graph6_byte(char c) { return c >= kGraph6Bias && c <= kGraph6Max; }

std::size_t parse_count(std::string_view token, const char *what) {
  std::size_t value = 0;
  const auto *end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw InputError(std::string("expected a non-negative integer for ") +
                     what + ", got '" + std::string(token) + "'");
  return value;
}

} // namespace

std::string graph6_encode(const Graph &g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw InputError("graph6 short form supports at most 62 vertices, got " +
                     std::to_string(n));
  std::string out(1, static_cast<char>(n + kGraph6Bias));
  int chunk = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kGraph6Bias));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((chunk << (6 - filled)) + kGraph6Bias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header))
    text.remove_prefix(header.size());
  if (text.empty())
    throw InputError("graph6: empty input");
  for (char c : text)
    if (!is_graph6_byte(c))
      throw InputError("graph6: byte " +
                       std::to_string(static_cast<unsigned char>(c)) +
                       " outside printable range 63..126");
  if (text.front() == kGraph6Max)
    throw InputError("graph6: long-form header (n > 62) is not supported");
  const std::size_t n = static_cast<std::size_t>(text.front() - kGraph6Bias);
  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - 1 != body)
    throw InputError("graph6: expected " + std::to_string(body) +
                     " data bytes for n=" + std::to_string(n) + ", got " +
                     std::to_string(text.size() - 1));
  Graph g(n);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int chunk = text[1 + k / 6] - kGraph6Bias;
      if ((chunk >> (5 - k % 6)) & 1)
        g.add_edge(u, v);
    }
  for (; k < body * 6; ++k) {
    const int chunk = text[1 + k / 6] - kGraph6Bias;
    if ((chunk >> (5 - k % 6)) & 1)
      throw InputError("graph6: nonzero padding bits");
  }
  return g;
}

std::string edge_list_encode(const Graph &g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto &[u, v] : g.edges())
    out << u << ' ' << v << '\n';
  return out.str();
}

Graph edge_list_decode(std::string_view text) {
  const auto lines = nonempty_lines(text);
  if (lines.empty())
    throw InputError("edge list: missing vertex count");
  const std::size_t n = parse_count(lines.front(), "vertex count");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos)
      throw InputError("edge list: line " + std::to_string(i + 1) +
                       " needs two endpoints");
    const auto u = parse_count(trim(line.substr(0, gap)), "edge endpoint");
    const auto v = parse_count(trim(line.substr(gap + 1)), "edge endpoint");
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

std::string matrix_encode(const BitMatrix &m) {
  std::string out;
  out.reserve(m.rows() * (m.cols() + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.push_back(m.get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

namespace {

// Matrix rows may be written "0110" or "0 1 1 0".
std::vector<std::string> matrix_rows(std::string_view text) {
  std::vector<std::string> rows;
  for (auto line : nonempty_lines(text)) {
    std::string row;
    for (char ch : line)
      if (ch != ' ' && ch != '\t' && ch != ',')
        row.push_back(ch);
    if (!row.empty())
      rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

BitMatrix matrix_decode(std::string_view text) {
  const auto lines = matrix_rows(text);
  const std::size_t n = lines.size();
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (lines[r].size() != n)
      throw InputError("matrix: row " + std::to_string(r) + " has " +
                       std::to_string(lines[r].size()) +
                       " entries, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      const char ch = lines[r][c];
      if (ch != '0' && ch != '1')
        throw InputError("matrix: entries must be '0' or '1'");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "auto")
    return GraphFormat::automatic;
  if (name == "graph6")
    return GraphFormat::graph6;
  if (name == "edgelist")
    return GraphFormat::edge_list;
  if (name == "matrix")
    return GraphFormat::matrix;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
  case GraphFormat::graph6:
    return graph6_decode(text);
  case GraphFormat::edge_list:
    return edge_list_decode(text);
  case GraphFormat::matrix:
    return Graph::from_adjacency(matrix_decode(text));
  case GraphFormat::automatic:
    break;
  }
  const auto lines = nonempty_lines(text);
  if (lines.empty())
    throw InputError("empty graph input");
  const std::string_view first = lines.front();
  const bool single_token =
      lines.size() == 1 && first.find_first_of(" \t") == std::string_view::npos;
  if (single_token && (first.starts_with(">>graph6<<") ||
                       first.find_first_of("0123456789") == std::string_view::npos))
    return graph6_decode(first);
  const auto rows = matrix_rows(text);
  bool looks_like_matrix = rows.size() >= 2;
  for (const auto &line : rows)
    looks_like_matrix = looks_like_matrix && line.size() == rows.size() &&
                        line.find_first_not_of("01") == std::string_view::npos;
  // An edge-list header ("10") followed by "0 1" must not read as a matrix:
  // matrix rows are either all separated or all packed.
  const bool packed = first.find_first_of(" \t,") == std::string_view::npos;
  for (auto line : lines)
    looks_like_matrix =
        looks_like_matrix &&
        (line.find_first_of(" \t,") == std::string_view::npos) == packed;
  if (looks_like_matrix)
    return Graph::from_adjacency(matrix_decode(text));
  return edge_list_decode(text);
}

} // namespace t2sum
