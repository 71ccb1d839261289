#include "t2sum/t2.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "t2sum/error.hpp"
#include "t2sum/membership.hpp"

namespace t2sum {

namespace {

// Reduced row echelon form over GF(2); pivot_cols[b] is the pivot column of
// basis row b.
struct Reduction {
  BitMatrix rows;
  std::vector<std::size_t> pivot_cols;
};

Reduction reduce(const BitMatrix &m) {
  Reduction red{m, {}};
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    std::size_t pivot = next;
    while (pivot < m.rows() && !red.rows.get(pivot, c))
      ++pivot;
    if (pivot == m.rows())
      continue;
    if (pivot != next) {
      auto a = red.rows.row(pivot), b = red.rows.row(next);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next || !red.rows.get(r, c))
        continue;
      auto target = red.rows.row(r);
      auto source = red.rows.row(next);
      for (std::size_t w = 0; w < target.size(); ++w)
        target[w] ^= source[w];
    }
    red.pivot_cols.push_back(c);
    ++next;
  }
  return red;
}

Graph graph_from_pairs(std::size_t order, const BitMatrix &bits, bool by_row,
                       std::size_t index) {
  Graph g(order);
  const std::size_t count = choose2(order);
  for (std::size_t k = 0; k < count; ++k)
    if (by_row ? bits.get(index, k) : bits.get(k, index)) {
      const auto [a, b] = pair_at(order, k);
      g.add_edge(a, b);
    }
  return g;
}

} // namespace

PairMatrix pair_matrix(const Graph &k, const GridLabeling &labeling) {
  PairMatrix m(labeling.shape());
  const std::size_t p = labeling.shape().p();
  const std::size_t q = labeling.shape().q();
  for (const auto &e : elementary_decomposition(k, labeling))
    m.bits.set(pair_index(p, e.i, e.i2), pair_index(q, e.j, e.j2));
  return m;
}

PairMatrix pair_matrix(const Graph &k, GridShape shape) {
  return pair_matrix(k, GridLabeling::lexicographic(shape));
}

Graph member_from_pair_matrix(const PairMatrix &m) {
  const std::size_t p = m.shape.p();
  const std::size_t q = m.shape.q();
  Graph k(p * q);
  for (std::size_t r = 0; r < m.bits.rows(); ++r)
    for (std::size_t c = 0; c < m.bits.cols(); ++c)
      if (m.bits.get(r, c)) {
        const auto [i, i2] = pair_at(p, r);
        const auto [j, j2] = pair_at(q, c);
        k.add_edge(i * q + j, i2 * q + j2);
        k.add_edge(i * q + j2, i2 * q + j);
      }
  return k;
}

std::size_t gf2_rank(const BitMatrix &m) {
  BitMatrix work = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < work.cols() && rank < work.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < work.rows() && !work.get(pivot, c))
      ++pivot;
    if (pivot == work.rows())
      continue;
    auto top = work.row(rank);
    if (pivot != rank) {
      auto other = work.row(pivot);
      std::swap_ranges(top.begin(), top.end(), other.begin());
    }
    for (std::size_t r = rank + 1; r < work.rows(); ++r)
      if (work.get(r, c)) {
        auto target = work.row(r);
        for (std::size_t w = c / BitMatrix::kWordBits; w < target.size(); ++w)
          target[w] ^= top[w];
      }
    ++rank;
  }
  return rank;
}

std::size_t t2_of_pair_matrix(const PairMatrix &m) {
  if (m.bits.is_zero())
    return 2;
  return gf2_rank(m.bits);
}

std::size_t t2_exact(const Graph &k, const GridLabeling &labeling) {
  return t2_of_pair_matrix(pair_matrix(k, labeling));
}

std::size_t t2_exact(const Graph &k, GridShape shape) {
  return t2_exact(k, GridLabeling::lexicographic(shape));
}

std::vector<TensorSummand> t2_decomposition(const PairMatrix &m) {
  const std::size_t p = m.shape.p();
  const std::size_t q = m.shape.q();
  if (m.bits.is_zero()) {
    TensorSummand single{Graph::from_edges(p, {{0, 1}}),
                         Graph::from_edges(q, {{0, 1}})};
    return {single, single};
  }
  // In reduced echelon form every row of M is the XOR of the basis rows whose
  // pivot column it hits, so M = sum_b coefficients[:, b] * basis_b^T.
  const Reduction red = reduce(m.bits);
  const std::size_t rank = red.pivot_cols.size();
  BitMatrix coefficients(m.bits.rows(), rank);
  for (std::size_t r = 0; r < m.bits.rows(); ++r)
    for (std::size_t b = 0; b < rank; ++b)
      if (m.bits.get(r, red.pivot_cols[b]))
        coefficients.set(r, b);
  std::vector<TensorSummand> out;
  out.reserve(rank);
  for (std::size_t b = 0; b < rank; ++b)
    out.push_back({graph_from_pairs(p, coefficients, false, b),
                   graph_from_pairs(q, red.rows, true, b)});
  return out;
}

std::optional<std::size_t> t2_bruteforce_oracle(const Graph &k,
                                                GridShape shape,
                                                std::size_t max_l) {
  const std::size_t p = shape.p();
  const std::size_t q = shape.q();
  const std::size_t row_pairs = choose2(p);
  const std::size_t col_pairs = choose2(q);
  if (row_pairs + col_pairs > kOracleMaxPairs)
    throw ScaleError("oracle needs C(p,2) + C(q,2) <= 12, got " +
                     std::to_string(row_pairs + col_pairs));
  if (k.order() != shape.cells())
    throw InputError("graph order does not match the shape");

  const auto all_graphs = [](std::size_t order) {
    std::vector<Graph> out;
    const std::size_t pairs = choose2(order);
    for (std::size_t mask = 1; mask < (std::size_t{1} << pairs); ++mask) {
      Graph g(order);
      std::size_t bit = 0;
      for (Vertex a = 0; a < order; ++a)
        for (Vertex b = a + 1; b < order; ++b, ++bit)
          if ((mask >> bit) & 1u)
            g.add_edge(a, b);
      out.push_back(std::move(g));
    }
    return out;
  };

  std::vector<Graph> products;
  for (const Graph &g : all_graphs(p))
    for (const Graph &h : all_graphs(q))
      products.push_back(tensor_product(g, h));
  std::unordered_map<Graph, std::size_t, GraphHash> index_of;
  for (std::size_t idx = 0; idx < products.size(); ++idx)
    index_of.emplace(products[idx], idx);

  // Multisets with nondecreasing indices; the last summand is a table lookup.
  const auto search = [&](auto &&self, const Graph &residual, std::size_t from,
                          std::size_t remaining) -> bool {
    if (remaining == 1) {
      const auto hit = index_of.find(residual);
      return hit != index_of.end() && hit->second >= from;
    }
    for (std::size_t idx = from; idx < products.size(); ++idx)
      if (self(self, two_sum(residual, products[idx]), idx, remaining - 1))
        return true;
    return false;
  };

  for (std::size_t l = 1; l <= max_l; ++l)
    if (search(search, k, 0, l))
      return l;
  return std::nullopt;
}

std::optional<LabelingT2> t2_min_over_labelings(const Graph &k, GridShape shape,
                                                const RecognizeOptions &options) {
  std::optional<LabelingT2> best;
  for_each_member_labeling(
      k, shape,
      [&](const GridLabeling &labeling) {
        const std::size_t value = t2_exact(k, labeling);
        if (!best || value < best->t2)
          best = LabelingT2{value, labeling};
        return best->t2 > 1;
      },
      options);
  return best;
}

} // namespace t2sum
