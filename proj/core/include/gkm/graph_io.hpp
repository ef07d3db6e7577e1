#pragma once

#include "gkm/graph.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace gkm {

// Malformed input files (syntax or schema); distinct from axiom failures,
// which validate() reports on a successfully loaded graph.
struct GraphFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph file schema:
//   { "rank": r, "valence": n, "vertices": ["p", ...],
//     "edges": [ { "from": "p", "to": "q",
//                  "alpha": [c1, ..., cr], "alpha_rev": [d1, ..., dr] }, ... ] }
// Each undirected edge appears once; edge k becomes darts 2k (from -> to,
// alpha) and 2k+1 (to -> from, alpha_rev). Rejected: alpha_rev != +-alpha,
// loops, duplicate vertex names, wrong vector lengths, unknown vertices.
GkmGraph load_graph(const nlohmann::json& j);
GkmGraph load_graph_file(const std::string& path);

nlohmann::json graph_to_json(const GkmGraph& g);

nlohmann::json report_to_json(const ValidationReport& r);

}  // namespace gkm
