#include "t2sum/algebra.hpp"

#include <string>

#include "t2sum/error.hpp"

namespace t2sum {

Graph tensor_product(const Graph &g, const Graph &h) {
  const std::size_t q = h.order();
  Graph k(g.order() * q);
  const auto h_edges = h.edges();
  for (const auto &[i, i2] : g.edges())
    for (const auto &[j, j2] : h_edges) {
      k.add_edge(i * q + j, i2 * q + j2);
      k.add_edge(i * q + j2, i2 * q + j);
    }
  return k;
}

Graph two_sum(const Graph &g, const Graph &h) {
  Graph k = g;
  k ^= h;
  return k;
}

Graph tensor_elementary(std::size_t p, std::size_t q, std::size_t i,
                        std::size_t i2, std::size_t j, std::size_t j2) {
  if (i2 >= p || j2 >= q)
    throw InputError("elementary index out of range for shape (" +
                     std::to_string(p) + "," + std::to_string(q) + ")");
  if (i >= i2 || j >= j2)
    throw InputError("elementary indices must satisfy i < i2 and j < j2");
  Graph k(p * q);
  k.add_edge(i * q + j, i2 * q + j2);
  k.add_edge(i * q + j2, i2 * q + j);
  return k;
}

Graph tensor_2sum(std::span<const TensorSummand> summands) {
  if (summands.empty())
    throw InputError("a tensor 2-sum needs at least one summand");
  const std::size_t p = summands.front().g.order();
  const std::size_t q = summands.front().h.order();
  Graph k(p * q);
  for (std::size_t idx = 0; idx < summands.size(); ++idx) {
    const auto &[g, h] = summands[idx];
    if (g.order() != p || h.order() != q)
      throw InputError("summand " + std::to_string(idx) + " has shape (" +
                       std::to_string(g.order()) + "," +
                       std::to_string(h.order()) + "), expected (" +
                       std::to_string(p) + "," + std::to_string(q) + ")");
    if (g.empty_of_edges() || h.empty_of_edges())
      throw InputError("summand " + std::to_string(idx) +
                       " has an edgeless factor");
    k ^= tensor_product(g, h);
  }
  return k;
}

} // namespace t2sum
