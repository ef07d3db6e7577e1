#include "gkm/graph_io.hpp"

#include <fstream>
#include <set>

namespace gkm {

namespace {

std::vector<Int> parse_form(const nlohmann::json& j, int rank, const char* key) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw GraphFormatError(std::string(key) + " must be an integer array of length rank");
  std::vector<Int> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_number_integer())
      throw GraphFormatError(std::string(key) + " entries must be integers");
    coeffs.emplace_back(c.get<long long>());
  }
  return coeffs;
}

}  // namespace

GkmGraph load_graph(const nlohmann::json& j) {
  if (!j.is_object()) throw GraphFormatError("graph file must be a JSON object");
  for (const char* key : {"rank", "valence", "vertices", "edges"})
    if (!j.contains(key))
      throw GraphFormatError(std::string("missing key '") + key + "'");

  if (!j["rank"].is_number_integer() || j["rank"].get<long long>() < 1)
    throw GraphFormatError("rank must be a positive integer");
  if (!j["valence"].is_number_integer() || j["valence"].get<long long>() < 1)
    throw GraphFormatError("valence must be a positive integer");
  int rank = j["rank"].get<int>();
  int valence = j["valence"].get<int>();

  if (!j["vertices"].is_array() || j["vertices"].empty())
    throw GraphFormatError("vertices must be a non-empty array of names");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string() || v.get<std::string>().empty())
      throw GraphFormatError("vertex names must be non-empty strings");
    if (!seen.insert(v.get<std::string>()).second)
      throw GraphFormatError("duplicate vertex name '" + v.get<std::string>() + "'");
    names.push_back(v.get<std::string>());
  }
  std::map<std::string, int> index;
  for (size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);

  if (!j["edges"].is_array()) throw GraphFormatError("edges must be an array");
  std::vector<Dart> darts;
  int next = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_object()) throw GraphFormatError("edges must be objects");
    for (const char* key : {"from", "to", "alpha", "alpha_rev"})
      if (!e.contains(key))
        throw GraphFormatError(std::string("edge missing key '") + key + "'");
    if (!e["from"].is_string() || !e["to"].is_string())
      throw GraphFormatError("edge endpoints must be vertex names");
    auto from_it = index.find(e["from"].get<std::string>());
    auto to_it = index.find(e["to"].get<std::string>());
    if (from_it == index.end() || to_it == index.end())
      throw GraphFormatError("edge endpoint is not a declared vertex");
    if (from_it->second == to_it->second)
      throw GraphFormatError("loops are not allowed");
    LinearForm alpha(parse_form(e["alpha"], rank, "alpha"));
    LinearForm alpha_rev(parse_form(e["alpha_rev"], rank, "alpha_rev"));
    if (alpha_rev != alpha && alpha_rev != alpha.negated())
      throw GraphFormatError("alpha_rev must equal alpha or its negation");
    darts.push_back({next, from_it->second, to_it->second, next + 1, alpha});
    darts.push_back({next + 1, to_it->second, from_it->second, next, alpha_rev});
    next += 2;
  }

  return GkmGraph(rank, valence, std::move(names), std::move(darts));
}

GkmGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw GraphFormatError("cannot parse '" + path + "': " + e.what());
  }
  return load_graph(j);
}

nlohmann::json graph_to_json(const GkmGraph& g) {
  nlohmann::json j;
  j["rank"] = g.rank();
  j["valence"] = g.valence();
  j["vertices"] = g.vertex_names();
  nlohmann::json edges = nlohmann::json::array();
  for (const Dart& d : g.darts()) {
    if (d.id > d.reverse) continue;
    nlohmann::json e;
    e["from"] = g.vertex_name(d.from);
    e["to"] = g.vertex_name(d.to);
    nlohmann::json alpha = nlohmann::json::array();
    for (const Int& c : d.alpha.coeffs()) alpha.push_back(c.convert_to<long long>());
    nlohmann::json alpha_rev = nlohmann::json::array();
    for (const Int& c : g.dart(d.reverse).alpha.coeffs())
      alpha_rev.push_back(c.convert_to<long long>());
    e["alpha"] = std::move(alpha);
    e["alpha_rev"] = std::move(alpha_rev);
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  return j;
}

nlohmann::json report_to_json(const ValidationReport& r) {
  nlohmann::json j;
  j["valid"] = r.ok();
  nlohmann::json issues = nlohmann::json::array();
  for (const ValidationIssue& issue : r.issues) {
    nlohmann::json e;
    e["axiom"] = axiom_name(issue.axiom);
    e["vertices"] = issue.vertices;
    e["darts"] = issue.darts;
    e["detail"] = issue.detail;
    issues.push_back(std::move(e));
  }
  j["issues"] = std::move(issues);
  return j;
}

}  // namespace gkm
