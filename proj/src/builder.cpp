#include "t2sum/builder.hpp"

#include <algorithm>
#include <functional>

#include "t2sum/error.hpp"

namespace t2sum {

PptConstruction build_ppt_graph(const Graph &g) {
  const std::size_t n = g.order();
  if (n < 2)
    throw InputError("the PPT construction needs at least 2 vertices");
  Graph h(n * n);
  for (const auto &[i, j] : g.edges()) {
    h.add_edge(i * n + i, j * n + j);
    h.add_edge(i * n + j, j * n + i);
  }
  return {std::move(h), GridLabeling::lexicographic(GridShape(n, n))};
}

ComponentSummary component_summary(const Graph &g) {
  ComponentSummary out;
  for (const auto &vertices : connected_components(g)) {
    const Graph part = g.induced(vertices);
    ComponentInfo info{part.order(), part.edge_count(), {}};
    for (Vertex v = 0; v < part.order(); ++v)
      info.degrees.push_back(part.degree(v));
    std::sort(info.degrees.rbegin(), info.degrees.rend());
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool are_isomorphic(const Graph &a, const Graph &b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count())
    return false;
  std::vector<std::size_t> deg_a(n), deg_b(n);
  for (Vertex v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return false;
  }
  std::vector<Vertex> image(n);
  std::vector<bool> taken(n, false);
  const std::function<bool(Vertex)> extend = [&](Vertex v) {
    if (v == n)
      return true;
    for (Vertex w = 0; w < n; ++w) {
      if (taken[w] || deg_a[v] != deg_b[w])
        continue;
      bool fits = true;
      for (Vertex u = 0; u < v && fits; ++u)
        fits = a.has_edge(u, v) == b.has_edge(image[u], w);
      if (!fits)
        continue;
      image[v] = w;
      taken[w] = true;
      if (extend(v + 1))
        return true;
      taken[w] = false;
    }
    return false;
  };
  return extend(0);
}

bool verify_components(const Graph &h, const Graph &g) {
  const std::size_t n = g.order();
  const std::size_t m = g.edge_count();
  if (h.order() != n * n || n * n < n + 2 * m)
    return false;

  std::vector<Graph> expected;
  for (const auto &vertices : connected_components(g))
    expected.push_back(g.induced(vertices));
  const Graph k2 = standard_graph(StandardKind::complete, 2);
  const Graph k1(1);
  expected.insert(expected.end(), m, k2);
  expected.insert(expected.end(), n * n - n - 2 * m, k1);

  std::vector<Graph> found;
  for (const auto &vertices : connected_components(h))
    found.push_back(h.induced(vertices));
  if (found.size() != expected.size())
    return false;

  // greedy matching is exact here: isomorphism is an equivalence relation
  std::vector<bool> used(expected.size(), false);
  for (const Graph &part : found) {
    bool matched = false;
    for (std::size_t idx = 0; idx < expected.size() && !matched; ++idx)
      if (!used[idx] && are_isomorphic(part, expected[idx])) {
        used[idx] = true;
        matched = true;
      }
    if (!matched)
      return false;
  }
  return true;
}

} // namespace t2sum
