#include "doctest.h"

#include <random>

#include "t2sum/algebra.hpp"
#include "t2sum/certificate_json.hpp"
#include "t2sum/error.hpp"
#include "t2sum/membership.hpp"
#include "t2sum/recognition.hpp"
#include "test_support.hpp"

using namespace t2sum;
using namespace t2sum::testing;
using nlohmann::json;

TEST_CASE("member certificates verify and round-trip") {
  std::mt19937_64 rng(97);
  const Graph k = tensor_product(complete(3), complete(3)).relabeled(random_permutation(9, rng));
  const Certificate cert = recognize(k, GridShape(3, 3));
  const json doc = certificate_to_json(cert, k);
  CHECK(doc["verdict"] == "member");
  CHECK(doc["scope"] == "unlabeled");
  CHECK(doc["summands"].size() == 9);
  for (const char *field : {"verdict", "labeling", "summands", "witness"})
    CHECK(doc.contains(field));
  CHECK(verify_certificate(doc).ok);

  const ParsedCertificate parsed = certificate_from_json(json::parse(doc.dump()));
  CHECK(parsed.graph == k);
  CHECK(parsed.cert.labeling == cert.labeling);
  CHECK(parsed.cert.summands == cert.summands);

  json dropped = doc;
  dropped["summands"].erase(dropped["summands"].begin());
  CHECK_FALSE(verify_certificate(dropped).ok);

  json edited = doc;
  edited["graph"]["edges"].erase(edited["graph"]["edges"].begin());
  CHECK_FALSE(verify_certificate(edited).ok);

  json swapped = doc;
  std::swap(swapped["labeling"]["assignment"][0], swapped["labeling"]["assignment"][1]);
  if (swapped["labeling"] != doc["labeling"])
    CHECK_FALSE(verify_certificate(swapped).ok);
}

TEST_CASE("edgeless member certificate carries the flag") {
  const Certificate cert = is_spanning_cross_like(Graph(4), GridShape(2, 2));
  json doc = certificate_to_json(cert, Graph(4));
  CHECK(doc["flags"] == json::array({std::string(kEmptyDecompositionFlag)}));
  CHECK(verify_certificate(doc).ok);
  doc["flags"] = json::array();
  CHECK_FALSE(verify_certificate(doc).ok);
}

TEST_CASE("non-member certificates verify") {
  const Graph p4 = standard_graph(StandardKind::path, 4);
  CHECK(verify_certificate(certificate_to_json(recognize(p4, GridShape(2, 2)), p4)).ok);

  const Graph k4 = complete(4);
  const json k4_doc = certificate_to_json(recognize(k4, GridShape(2, 2)), k4);
  CHECK(k4_doc["witness"]["reason"] == "no-independent-row-partition");
  CHECK(verify_certificate(k4_doc).ok);

  const Graph c4 = standard_graph(StandardKind::cycle, 4);
  CHECK(verify_certificate(certificate_to_json(recognize(c4, GridShape(2, 2)), c4)).ok);
  RecognizeOptions search_only;
  search_only.use_prefilter = false;
  const json exhausted = certificate_to_json(recognize(c4, GridShape(2, 2), search_only), c4);
  CHECK(exhausted["witness"]["reason"] == "search-exhausted");
  CHECK(verify_certificate(exhausted).ok);

  const Graph shown = displayed_p4();
  const json labeled = certificate_to_json(is_spanning_cross_like(shown, GridShape(2, 2)), shown);
  CHECK(labeled["scope"] == "labeled");
  CHECK(labeled["witness"]["edge"] == json::array({0, 2}));
  CHECK(verify_certificate(labeled).ok);

  Graph half(4);
  half.add_edge(0, 3);
  const json partner = certificate_to_json(is_spanning_cross_like(half, GridShape(2, 2)), half);
  CHECK(partner["witness"]["reason"] == "missing-cross-partner");
  CHECK(verify_certificate(partner).ok);
}

TEST_CASE("false non-member claims are rejected") {
  const Graph k = tensor_product(complete(2), complete(2));
  json doc = certificate_to_json(recognize(k, GridShape(2, 2)), k);
  doc["verdict"] = "non-member";
  doc["summands"] = nullptr;
  doc["witness"] = {{"reason", "search-exhausted"}, {"edge", nullptr}};
  CHECK_FALSE(verify_certificate(doc).ok);
  doc["witness"]["reason"] = "odd-edge-count";
  CHECK_FALSE(verify_certificate(doc).ok);
  doc["witness"] = {{"reason", "missing-cross-partner"}, {"edge", {0, 3}}};
  doc["scope"] = "labeled";
  CHECK_FALSE(verify_certificate(doc).ok);
  doc["witness"] = {{"reason", "same-row-or-column-edge"}, {"edge", {0, 3}}};
  CHECK_FALSE(verify_certificate(doc).ok);
  doc["witness"] = {{"reason", "edge-bound-exceeded"}, {"edge", nullptr}};
  CHECK_FALSE(verify_certificate(doc).ok);
  doc["witness"] = {{"reason", "no-independent-row-partition"}, {"edge", nullptr}};
  CHECK_FALSE(verify_certificate(doc).ok);
}

TEST_CASE("malformed certificates throw") {
  CHECK_THROWS_AS(certificate_from_json(json::object()), InputError);
  CHECK_THROWS_AS(verify_certificate(json{{"verdict", "maybe"}}), InputError);
  const Graph k = tensor_product(complete(2), complete(2));
  json doc = certificate_to_json(recognize(k, GridShape(2, 2)), k);
  doc["witness"] = {{"reason", "gut-feeling"}, {"edge", nullptr}};
  CHECK_THROWS_AS(certificate_from_json(doc), InputError);
}
