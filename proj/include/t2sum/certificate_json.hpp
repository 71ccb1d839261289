#pragma once

#include <string>

#include "json.hpp"

#include "t2sum/graph.hpp"
#include "t2sum/membership.hpp"

namespace t2sum {

/// Certificate document. Field names are fixed:
///
///   verdict   "member" | "non-member"
///   shape     {"p", "q"}
///   scope     "labeled" | "unlabeled"
///   graph     {"n": n, "edges": [[u, v], ...]}
///   labeling  {"p", "q", "assignment": [[row, col], ...]} or null
///   summands  [[i, i2, j, j2], ...] or null
///   witness   {"reason": tag, "edge": [u, v] or null} or null
///   flags     [string, ...]
nlohmann::json certificate_to_json(const Certificate &cert, const Graph &k);

struct ParsedCertificate {
  Certificate cert;
  Graph graph;
};

/// Throws InputError on a structurally invalid document.
ParsedCertificate certificate_from_json(const nlohmann::json &doc);

struct VerifyResult {
  bool ok;
  std::string message;
};

/// Re-derives the certificate's claim from its own contents: members must
/// recombine to the embedded graph; non-member witnesses are re-checked, and
/// search-exhausted verdicts are re-run through recognition.
VerifyResult verify_certificate(const nlohmann::json &doc);

} // namespace t2sum
