#include "doctest.h"

#include <algorithm>
#include <optional>
#include <random>

#include "t2sum/algebra.hpp"
#include "t2sum/error.hpp"
#include "t2sum/membership.hpp"
#include "t2sum/recognition.hpp"
#include "t2sum/t2.hpp"
#include "test_support.hpp"

using namespace t2sum;
using namespace t2sum::testing;

namespace {

// Walks every bijection vertex -> cell in lexicographic order of the
// assignment sequence; returns the first member labeling and the count.
struct BruteForce {
  std::optional<std::vector<Cell>> first;
  std::size_t members = 0;
};

BruteForce brute_force_labelings(const Graph &k, GridShape shape) {
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < shape.p(); ++r)
    for (std::size_t c = 0; c < shape.q(); ++c)
      cells.push_back({r, c});
  BruteForce out;
  do {
    if (check_labeled(k, GridLabeling(shape, cells)).is_member()) {
      if (!out.first)
        out.first = cells;
      ++out.members;
    }
  } while (std::next_permutation(cells.begin(), cells.end()));
  return out;
}

Graph graph_from_mask(std::size_t n, std::size_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u)
        g.add_edge(u, v);
  return g;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void check_against_brute_force(const Graph &k, GridShape shape) {
  const BruteForce expected = brute_force_labelings(k, shape);
  const Certificate cert = recognize(k, shape);
  CHECK(cert.scope == Scope::unlabeled);
  REQUIRE(cert.is_member() == expected.first.has_value());
  std::size_t canonical = 0;
  for_each_member_labeling(k, shape, [&](const GridLabeling &) {
    ++canonical;
    return true;
  });
  CHECK(canonical * factorial(shape.p()) * factorial(shape.q()) == expected.members);
  if (cert.is_member()) {
    CHECK(cert.labeling->assignment() == *expected.first);
    CHECK(recombine(*cert.summands, *cert.labeling) == k);
  }
}

} // namespace

TEST_CASE("prefilter") {
  CHECK(prefilter(standard_graph(StandardKind::path, 4), GridShape(2, 2)) ==
        WitnessReason::odd_edge_count);
  CHECK(prefilter(complete(4), GridShape(2, 2)) ==
        WitnessReason::no_independent_row_partition);
  CHECK(prefilter(tensor_product(complete(2), complete(2)), GridShape(2, 2)) == std::nullopt);
  CHECK(prefilter(standard_graph(StandardKind::cycle, 4), GridShape(2, 2)) ==
        WitnessReason::edge_bound_exceeded);
  // K_{3,3} splits into independent triples but has 9 edges (odd)
  Graph k33(6);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b)
      k33.add_edge(a, b);
  CHECK(prefilter(k33, GridShape(2, 3)) == WitnessReason::odd_edge_count);
  // a row of size 3 takes at most one vertex from each of two triangles
  const Graph two_triangles = disjoint_union({complete(3), complete(3)});
  CHECK(prefilter(two_triangles, GridShape(2, 3)) ==
        WitnessReason::no_independent_row_partition);
  CHECK(prefilter(two_triangles, GridShape(3, 2)) == std::nullopt);
}

TEST_CASE("recognition examples") {
  const Certificate p4 = recognize(standard_graph(StandardKind::path, 4), GridShape(2, 2));
  CHECK_FALSE(p4.is_member());
  CHECK(p4.witness->reason == WitnessReason::odd_edge_count);

  const Graph c4 = standard_graph(StandardKind::cycle, 4);
  const Certificate c4_cert = recognize(c4, GridShape(2, 2));
  CHECK_FALSE(c4_cert.is_member());
  CHECK(c4_cert.witness->reason == WitnessReason::edge_bound_exceeded);
  RecognizeOptions search_only;
  search_only.use_prefilter = false;
  const Certificate c4_search = recognize(c4, GridShape(2, 2), search_only);
  CHECK_FALSE(c4_search.is_member());
  CHECK(c4_search.witness->reason == WitnessReason::search_exhausted);
  CHECK_FALSE(brute_force_labelings(c4, GridShape(2, 2)).first);

  std::mt19937_64 rng(43);
  const Graph k33 = tensor_product(complete(3), complete(3));
  for (int trial = 0; trial < 20; ++trial) {
    const Graph scrambled = k33.relabeled(random_permutation(9, rng));
    const Certificate cert = recognize(scrambled, GridShape(3, 3));
    REQUIRE(cert.is_member());
    CHECK(cert.labeling->cell(0) == Cell{0, 0});
    CHECK(recombine(*cert.summands, *cert.labeling) == scrambled);
  }
}

TEST_CASE("recognition matches brute force over all graphs on 4 vertices") {
  for (std::size_t mask = 0; mask < 64; ++mask)
    check_against_brute_force(graph_from_mask(4, mask), GridShape(2, 2));
}

TEST_CASE("recognition matches brute force on 6 vertices") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(6, 0.3, rng);
    check_against_brute_force(g, GridShape(2, 3));
    check_against_brute_force(g, GridShape(3, 2));
  }
  // every labeled member at (2,3), scrambled
  for_each_member_labeling(Graph(6), GridShape(2, 3), [](const GridLabeling &) { return false; });
  for (std::size_t mask = 0; mask < 8; ++mask) {
    PairMatrix m{GridShape(2, 3)};
    for (std::size_t c = 0; c < 3; ++c)
      m.bits.set(0, c, (mask >> c) & 1u);
    const Graph member = member_from_pair_matrix(m).relabeled(random_permutation(6, rng));
    check_against_brute_force(member, GridShape(2, 3));
    check_against_brute_force(member, GridShape(3, 2));
  }
}

TEST_CASE("no false negatives on scrambled census members") {
  std::mt19937_64 rng(53);
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const GridShape shape(p, q);
    const std::size_t bits = choose2(p) * choose2(q);
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
      PairMatrix m(shape);
      for (std::size_t b = 0; b < bits; ++b)
        m.bits.set(b / choose2(q), b % choose2(q), (mask >> b) & 1u);
      const Graph k = member_from_pair_matrix(m).relabeled(random_permutation(p * q, rng));
      const Certificate cert = recognize(k, shape);
      REQUIRE(cert.is_member());
      CHECK(recombine(*cert.summands, *cert.labeling) == k);
      CHECK(recognize(k, shape.transposed()).is_member());
    }
  }
}

TEST_CASE("sampled members at larger shapes are recognized") {
  std::mt19937_64 rng(59);
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{2, 4}, {4, 2}, {3, 3}, {4, 4}}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<TensorSummand> summands;
      const std::size_t l = 1 + rng() % 4;
      for (std::size_t k = 0; k < l; ++k)
        summands.push_back({random_nontrivial_graph(p, rng), random_nontrivial_graph(q, rng)});
      const Graph k = tensor_2sum(summands).relabeled(random_permutation(p * q, rng));
      const Certificate cert = recognize(k, GridShape(p, q));
      REQUIRE(cert.is_member());
      CHECK(recombine(*cert.summands, *cert.labeling) == k);
    }
  }
}

TEST_CASE("verdicts are invariant under relabeling and grid transpose") {
  std::mt19937_64 rng(61);
  for (std::size_t mask = 0; mask < (std::size_t{1} << 15); mask += 7) {
    const Graph g = graph_from_mask(6, mask);
    const bool verdict = recognize(g, GridShape(2, 3)).is_member();
    CHECK(recognize(g, GridShape(3, 2)).is_member() == verdict);
    CHECK(recognize(g.relabeled(random_permutation(6, rng)), GridShape(2, 3)).is_member() == verdict);
  }
}

TEST_CASE("recognition contract errors and cancellation") {
  CHECK_THROWS_AS(recognize(Graph(5), GridShape(2, 2)), InputError);
  CHECK_THROWS_AS(recognize(Graph(18), GridShape(3, 6)), ScaleError);
  RecognizeOptions large;
  large.allow_large = true;
  CHECK(recognize(Graph(18), GridShape(3, 6), large).is_member());
  CHECK_THROWS_AS(recognize(Graph(66), GridShape(6, 11), large), ScaleError);

  std::stop_source source;
  source.request_stop();
  RecognizeOptions cancelled;
  cancelled.stop = source.get_token();
  CHECK_THROWS_AS(recognize(tensor_product(complete(3), complete(3)), GridShape(3, 3), cancelled),
                  SearchCancelled);
}
