#pragma once

#include "gkm/graph.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>

namespace gkm {

// A parallel transport: for each dart e a bijection P_e from the darts at
// i(e) to the darts at t(e), stored as (source dart, image dart) pairs sorted
// by source dart id.
struct Transport {
  std::vector<std::vector<std::pair<int, int>>> maps;
};

// The unique integer d with alpha(epp) - alpha(ep) == d * alpha(e), or
// nullopt when the difference is not a multiple. Requires ep in E_{i(e)} and
// epp in E_{t(e)}.
std::optional<Int> compat_coefficient(const GkmGraph& g, int e, int ep, int epp);

// Searches for a parallel transport; nullopt when none exists. Requires a
// validated graph.
//
// The search decouples per undirected edge: conditions (transport of e is the
// inverse along the reverse dart; e itself maps to its reverse; labels are
// compatible modulo alpha(e)) tie a dart only to its own reverse. If
// alpha(epp) - alpha(ep) = d * alpha(e) then alpha(ep) - alpha(epp) =
// -d * alpha(e) and Z*alpha(reverse e) = Z*alpha(e), so the inverse bijection
// is automatically compatible along the reverse dart. One perfect matching
// per dart therefore decides existence; the brute-force enumeration in the
// test suite checks this against all global assignments.
//
// When several transports exist the lexicographically least one under dart
// index order is returned.
std::optional<Transport> find_transport(const GkmGraph& g);

// All three transport conditions, checked exhaustively.
bool check_transport(const GkmGraph& g, const Transport& t);

// The map e' -> d_{e,e'} over e' in E_{i(e)} for a checked transport.
std::map<int, Int> transport_coefficients(const GkmGraph& g, const Transport& t,
                                          int e);

// validate(g) passes and a parallel transport exists.
bool is_gkm(const GkmGraph& g);

nlohmann::json transport_to_json(const Transport& t);

}  // namespace gkm
