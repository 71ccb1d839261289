#include "t2sum/graph.hpp"

#include <algorithm>
#include <string>

#include "t2sum/error.hpp"

namespace t2sum {

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= order() || v >= order())
    throw InputError("vertex out of range: {" + std::to_string(u) + "," +
                     std::to_string(v) + "} on " + std::to_string(order()) +
                     " vertices");
  if (u == v)
    throw InputError("self-loop at vertex " + std::to_string(u));
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge> &edges) {
  Graph g(n);
  for (const auto &[u, v] : edges)
    g.add_edge(u, v);
  return g;
}

Graph Graph::from_adjacency(BitMatrix m) {
  if (m.rows() != m.cols())
    throw InputError("adjacency matrix is not square");
  const std::size_t n = m.rows();
  for (std::size_t u = 0; u < n; ++u) {
    if (m.get(u, u))
      throw InputError("adjacency matrix has a nonzero diagonal entry at " +
                       std::to_string(u));
    for (std::size_t v = u + 1; v < n; ++v)
      if (m.get(u, v) != m.get(v, u))
        throw InputError("adjacency matrix is not symmetric at (" +
                         std::to_string(u) + "," + std::to_string(v) + ")");
  }
  Graph g;
  g.adj_ = std::move(m);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_.set(u, v);
  adj_.set(v, u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_.set(u, v, false);
  adj_.set(v, u, false);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_.flip(u, v);
  adj_.flip(v, u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v)
      if (adj_.get(u, v))
        out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < order(); ++u)
    if (adj_.get(v, u))
      out.push_back(u);
  return out;
}

Graph Graph::relabeled(const std::vector<Vertex> &perm) const {
  if (perm.size() != order())
    throw InputError("relabeling has wrong length");
  std::vector<bool> seen(order(), false);
  for (Vertex image : perm) {
    if (image >= order() || seen[image])
      throw InputError("relabeling is not a permutation");
    seen[image] = true;
  }
  Graph g(order());
  for (const auto &[u, v] : edges())
    g.add_edge(perm[u], perm[v]);
  return g;
}

Graph Graph::induced(const std::vector<Vertex> &vertices) const {
  Graph g(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (has_edge(vertices[a], vertices[b]))
        g.add_edge(a, b);
  return g;
}

Graph &Graph::operator^=(const Graph &other) {
  if (order() != other.order())
    throw InputError("2-sum needs equal vertex counts, got " +
                     std::to_string(order()) + " and " +
                     std::to_string(other.order()));
  adj_ ^= other.adj_;
  return *this;
}

StandardKind parse_standard_kind(std::string_view name) {
  if (name == "complete")
    return StandardKind::complete;
  if (name == "path")
    return StandardKind::path;
  if (name == "cycle")
    return StandardKind::cycle;
  if (name == "edgeless")
    return StandardKind::edgeless;
  throw InputError("unknown graph kind '" + std::string(name) + "'");
}

Graph standard_graph(StandardKind kind, std::size_t n) {
  if (n < 1)
    throw InputError("standard graphs need at least one vertex");
  Graph g(n);
  switch (kind) {
  case StandardKind::complete:
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        g.add_edge(u, v);
    break;
  case StandardKind::path:
    for (Vertex u = 0; u + 1 < n; ++u)
      g.add_edge(u, u + 1);
    break;
  case StandardKind::cycle:
    if (n < 3)
      throw InputError("a cycle needs at least 3 vertices");
    for (Vertex u = 0; u < n; ++u)
      g.add_edge(u, (u + 1) % n);
    break;
  case StandardKind::edgeless:
    break;
  }
  return g;
}

Graph disjoint_union(const std::vector<Graph> &parts) {
  std::size_t total = 0;
  for (const Graph &part : parts)
    total += part.order();
  Graph g(total);
  std::size_t offset = 0;
  for (const Graph &part : parts) {
    for (const auto &[u, v] : part.edges())
      g.add_edge(u + offset, v + offset);
    offset += part.order();
  }
  return g;
}

std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    std::vector<Vertex> component{root};
    seen[root] = true;
    for (std::size_t head = 0; head < component.size(); ++head)
      for (Vertex w : g.neighbors(component[head]))
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::size_t GraphHash::operator()(const Graph &g) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(g.order());
  for (auto w : g.adjacency().words())
    h ^= std::hash<BitMatrix::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  return h;
}

} // namespace t2sum
