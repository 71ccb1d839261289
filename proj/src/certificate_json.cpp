#include "t2sum/certificate_json.hpp"

#include <algorithm>

#include "t2sum/error.hpp"
#include "t2sum/recognition.hpp"

namespace t2sum {

using nlohmann::json;

namespace {

json graph_to_json(const Graph &k) {
  json edges = json::array();
  for (const auto &[u, v] : k.edges())
    edges.push_back({u, v});
  return {{"n", k.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json &doc) {
  std::vector<Edge> edges;
  for (const auto &e : doc.at("edges"))
    edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  return Graph::from_edges(doc.at("n").get<std::size_t>(), edges);
}

VerifyResult fail(std::string message) { return {false, std::move(message)}; }

} // namespace

json certificate_to_json(const Certificate &cert, const Graph &k) {
  json doc;
  doc["verdict"] = to_string(cert.verdict);
  doc["scope"] = to_string(cert.scope);
  if (cert.shape)
    doc["shape"] = {{"p", cert.shape->p()}, {"q", cert.shape->q()}};
  else
    doc["shape"] = nullptr;
  doc["graph"] = graph_to_json(k);
  if (cert.labeling) {
    json cells = json::array();
    for (const auto &[row, col] : cert.labeling->assignment())
      cells.push_back({row, col});
    doc["labeling"] = {{"p", cert.labeling->shape().p()},
                       {"q", cert.labeling->shape().q()},
                       {"assignment", std::move(cells)}};
  } else {
    doc["labeling"] = nullptr;
  }
  if (cert.summands) {
    json list = json::array();
    for (const auto &e : *cert.summands)
      list.push_back({e.i, e.i2, e.j, e.j2});
    doc["summands"] = std::move(list);
  } else {
    doc["summands"] = nullptr;
  }
  if (cert.witness) {
    json edge = nullptr;
    if (cert.witness->edge)
      edge = {cert.witness->edge->first, cert.witness->edge->second};
    doc["witness"] = {{"reason", to_string(cert.witness->reason)},
                      {"edge", std::move(edge)}};
  } else {
    doc["witness"] = nullptr;
  }
  doc["flags"] = cert.flags;
  return doc;
}

ParsedCertificate certificate_from_json(const json &doc) {
  try {
    ParsedCertificate out{{}, graph_from_json(doc.at("graph"))};
    Certificate &cert = out.cert;
    cert.verdict = parse_verdict(doc.at("verdict").get<std::string>());
    cert.scope = parse_scope(doc.at("scope").get<std::string>());
    if (const auto &shape = doc.at("shape"); !shape.is_null())
      cert.shape = GridShape(shape.at("p").get<std::size_t>(),
                             shape.at("q").get<std::size_t>());
    if (const auto &lab = doc.at("labeling"); !lab.is_null()) {
      std::vector<Cell> cells;
      for (const auto &c : lab.at("assignment"))
        cells.push_back({c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>()});
      cert.labeling = GridLabeling(
          GridShape(lab.at("p").get<std::size_t>(), lab.at("q").get<std::size_t>()),
          std::move(cells));
    }
    if (const auto &list = doc.at("summands"); !list.is_null()) {
      cert.summands.emplace();
      for (const auto &e : list)
        cert.summands->push_back({e.at(0).get<std::size_t>(),
                                  e.at(1).get<std::size_t>(),
                                  e.at(2).get<std::size_t>(),
                                  e.at(3).get<std::size_t>()});
    }
    if (const auto &w = doc.at("witness"); !w.is_null()) {
      Witness witness{parse_witness_reason(w.at("reason").get<std::string>()),
                      std::nullopt};
      if (const auto &edge = w.at("edge"); !edge.is_null())
        witness.edge =
            Edge{edge.at(0).get<std::size_t>(), edge.at(1).get<std::size_t>()};
      cert.witness = witness;
    }
    if (doc.contains("flags"))
      cert.flags = doc.at("flags").get<std::vector<std::string>>();
    return out;
  } catch (const json::exception &e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

VerifyResult verify_certificate(const json &doc) {
  ParsedCertificate parsed = [&] {
    try {
      return certificate_from_json(doc);
    } catch (const InputError &) {
      throw;
    } catch (const std::exception &e) {
      throw InputError(std::string("malformed certificate: ") + e.what());
    }
  }();
  const Certificate &cert = parsed.cert;
  const Graph &k = parsed.graph;
  if (!cert.shape)
    return fail("certificate lacks a shape");
  const GridShape shape = *cert.shape;
  if (k.order() != shape.cells())
    return fail("graph order does not match the shape");
  if (cert.labeling && !(cert.labeling->shape() == shape))
    return fail("labeling shape differs from the certificate shape");

  if (cert.is_member()) {
    if (!cert.labeling || !cert.summands)
      return fail("member certificate lacks a labeling or summands");
    for (const auto &e : *cert.summands)
      if (!(e.i < e.i2 && e.i2 < shape.p() && e.j < e.j2 && e.j2 < shape.q()))
        return fail("summand index out of range");
    if (!std::is_sorted(cert.summands->begin(), cert.summands->end()) ||
        std::adjacent_find(cert.summands->begin(), cert.summands->end()) !=
            cert.summands->end())
      return fail("summands are not strictly sorted");
    if (recombine(*cert.summands, *cert.labeling) != k)
      return fail("summands do not recombine to the graph");
    const bool flagged =
        std::find(cert.flags.begin(), cert.flags.end(),
                  kEmptyDecompositionFlag) != cert.flags.end();
    if (cert.summands->empty() != flagged)
      return fail("empty-decomposition flag does not match the summands");
    return {true, "member: " + std::to_string(cert.summands->size()) +
                      " elementary summands recombine to the graph"};
  }

  if (!cert.witness)
    return fail("non-member certificate lacks a witness");
  const Witness &w = *cert.witness;
  const auto edge_witness_problem = [&]() -> std::optional<VerifyResult> {
    if (cert.scope != Scope::labeled || !cert.labeling || !w.edge)
      return fail("edge witness needs a labeled scope, a labeling and an edge");
    const auto [u, v] = *w.edge;
    if (u >= k.order() || v >= k.order() || u == v || !k.has_edge(u, v))
      return fail("witness edge is not an edge of the graph");
    return std::nullopt;
  };

  switch (w.reason) {
  case WitnessReason::odd_edge_count:
    if (k.edge_count() % 2 == 0)
      return fail("graph has an even number of edges");
    return {true, "non-member: odd edge count"};
  case WitnessReason::edge_bound_exceeded:
    if (k.edge_count() <= edge_bound(shape))
      return fail("graph does not exceed the edge bound");
    return {true, "non-member: more edges than K_p x K_q"};
  case WitnessReason::same_row_or_column_edge: {
    if (auto bad = edge_witness_problem())
      return *bad;
    const Cell &a = cert.labeling->cell(w.edge->first);
    const Cell &b = cert.labeling->cell(w.edge->second);
    if (a.row != b.row && a.col != b.col)
      return fail("witness edge does not lie in one row or column");
    return {true, "labeled non-member: edge inside a grid row or column"};
  }
  case WitnessReason::missing_cross_partner: {
    if (auto bad = edge_witness_problem())
      return *bad;
    const Cell &a = cert.labeling->cell(w.edge->first);
    const Cell &b = cert.labeling->cell(w.edge->second);
    if (a.row == b.row || a.col == b.col)
      return fail("witness edge lies in one row or column");
    if (k.has_edge(cert.labeling->vertex_at(a.row, b.col),
                   cert.labeling->vertex_at(b.row, a.col)))
      return fail("witness edge has its cross partner");
    return {true, "labeled non-member: cross partner missing"};
  }
  case WitnessReason::no_independent_row_partition:
    if (prefilter(k, shape) != WitnessReason::no_independent_row_partition)
      return fail("graph does admit a partition into independent rows");
    return {true, "non-member: no partition into independent rows"};
  case WitnessReason::search_exhausted: {
    RecognizeOptions options;
    options.allow_large = true;
    if (recognize(k, shape, options).is_member())
      return fail("recognition finds a member labeling");
    return {true, "non-member: exhaustive search re-run finds no labeling"};
  }
  }
  return fail("unknown witness reason");
}

} // namespace t2sum
