#include "doctest.h"

#include <random>

#include "t2sum/algebra.hpp"
#include "t2sum/error.hpp"
#include "test_support.hpp"

using namespace t2sum;
using namespace t2sum::testing;

namespace {

// Adjacency of G x H read straight off the definition, over all vertex pairs.
std::size_t product_edges_by_definition(const Graph &g, const Graph &h) {
  std::size_t count = 0;
  const std::size_t p = g.order(), q = h.order();
  for (std::size_t a = 0; a < p * q; ++a)
    for (std::size_t b = a + 1; b < p * q; ++b)
      if (g.has_edge(a / q, b / q) && h.has_edge(a % q, b % q))
        ++count;
  return count;
}

} // namespace

TEST_CASE("tensor product examples") {
  const Graph k2k2 = tensor_product(complete(2), complete(2));
  CHECK(k2k2.order() == 4);
  // (0,0)-(1,1) is 0-3, (0,1)-(1,0) is 1-2
  CHECK(k2k2.edges() == std::vector<Edge>{{0, 3}, {1, 2}});

  const Graph k4k3 = tensor_product(complete(4), complete(3));
  CHECK(k4k3.order() == 12);
  CHECK(product_edges_by_definition(complete(4), complete(3)) == 36);
  CHECK(k4k3.edge_count() == 36);

  std::mt19937_64 rng(3);
  const Graph g = random_nontrivial_graph(4, rng);
  CHECK(tensor_product(g, Graph(3)) == Graph(12));
}

TEST_CASE("tensor product is the Kronecker product") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(1 + rng() % 5, 0.5, rng);
    const Graph h = random_graph(1 + rng() % 5, 0.5, rng);
    const Graph k = tensor_product(g, h);
    CHECK(well_formed(k));
    CHECK(dense(k) == kronecker(dense(g), dense(h)));
    CHECK(k.edge_count() == 2 * g.edge_count() * h.edge_count());
    CHECK(k.edge_count() == product_edges_by_definition(g, h));
  }
}

TEST_CASE("tensor product commutes up to the grid transpose") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t p = 2 + rng() % 3, q = 2 + rng() % 3;
    const Graph g = random_graph(p, 0.5, rng);
    const Graph h = random_graph(q, 0.5, rng);
    std::vector<Vertex> swap(p * q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j)
        swap[i * q + j] = j * p + i;
    CHECK(tensor_product(g, h).relabeled(swap) == tensor_product(h, g));
  }
}

TEST_CASE("two-sum examples and group laws") {
  std::mt19937_64 rng(17);
  const Graph g = random_graph(6, 0.5, rng);
  CHECK(two_sum(g, g) == Graph(6));
  CHECK(two_sum(g, Graph(6)) == g);
  CHECK_THROWS_AS(two_sum(g, Graph(5)), InputError);

  // the figure: K4 x K3 and C4 x P3 share the lexicographic labeling
  const Graph left = tensor_product(complete(4), complete(3));
  const Graph middle = tensor_product(standard_graph(StandardKind::cycle, 4),
                                      standard_graph(StandardKind::path, 3));
  CHECK(middle.edge_count() == 16);
  CHECK(two_sum(left, middle).edge_count() == 20);

  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const Graph a = random_graph(n, 0.5, rng);
    const Graph b = random_graph(n, 0.5, rng);
    const Graph c = random_graph(n, 0.5, rng);
    CHECK(two_sum(a, b) == two_sum(b, a));
    CHECK(two_sum(two_sum(a, b), c) == two_sum(a, two_sum(b, c)));
    CHECK(well_formed(two_sum(a, b)));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        CHECK(two_sum(a, b).has_edge(u, v) == ((a.has_edge(u, v) + b.has_edge(u, v)) % 2 == 1));
  }
}

TEST_CASE("tensor-elementary graphs") {
  CHECK(tensor_elementary(2, 2, 0, 1, 0, 1) == tensor_product(complete(2), complete(2)));
  const Graph e = tensor_elementary(2, 3, 0, 1, 0, 2);
  // (0,0)-(1,2) is 0-5, (0,2)-(1,0) is 2-3
  CHECK(e.edges() == std::vector<Edge>{{0, 5}, {2, 3}});
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t q = 2; q <= 4; ++q)
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t i2 = i + 1; i2 < p; ++i2)
          for (std::size_t j = 0; j < q; ++j)
            for (std::size_t j2 = j + 1; j2 < q; ++j2) {
              const Graph x = tensor_elementary(p, q, i, i2, j, j2);
              CHECK(x.edge_count() == 2);
              CHECK(x == tensor_product(Graph::from_edges(p, {{i, i2}}),
                                        Graph::from_edges(q, {{j, j2}})));
            }
  CHECK_THROWS_AS(tensor_elementary(2, 2, 0, 2, 0, 1), InputError);
  CHECK_THROWS_AS(tensor_elementary(3, 3, 1, 1, 0, 1), InputError);
  CHECK_THROWS_AS(tensor_elementary(3, 3, 2, 1, 0, 1), InputError);
  CHECK_THROWS_AS(tensor_elementary(3, 3, 0, 1, 2, 2), InputError);
}

TEST_CASE("tensor 2-sum") {
  const Graph k2 = complete(2);
  const std::vector<TensorSummand> single{{k2, k2}};
  CHECK(tensor_2sum(single) == tensor_product(k2, k2));

  std::mt19937_64 rng(23);
  const Graph g = random_nontrivial_graph(3, rng);
  const Graph h = random_nontrivial_graph(4, rng);
  const std::vector<TensorSummand> twice{{g, h}, {g, h}};
  CHECK(tensor_2sum(twice) == Graph(12));

  CHECK_THROWS_AS(tensor_2sum(std::vector<TensorSummand>{}), InputError);
  const std::vector<TensorSummand> mismatch{{g, h}, {h, g}};
  CHECK_THROWS_AS(tensor_2sum(mismatch), InputError);
  const std::vector<TensorSummand> trivial{{g, Graph(4)}};
  CHECK_THROWS_AS(tensor_2sum(trivial), InputError);
}

TEST_CASE("distributivity over the 2-sum") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = 2 + rng() % 3, q = 2 + rng() % 3;
    const Graph g = random_nontrivial_graph(p, rng);
    const Graph h1 = random_nontrivial_graph(q, rng);
    const Graph h2 = random_nontrivial_graph(q, rng);
    CHECK(tensor_product(g, two_sum(h1, h2)) ==
          two_sum(tensor_product(g, h1), tensor_product(g, h2)));
    if (h1 != h2) {
      const std::vector<TensorSummand> split{{g, h1}, {g, h2}};
      const std::vector<TensorSummand> merged{{g, two_sum(h1, h2)}};
      CHECK(tensor_2sum(split) == tensor_2sum(merged));
    }
  }
}
