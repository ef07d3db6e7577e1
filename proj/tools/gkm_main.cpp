// Command line front end: validation reports, transport search, graded
// bases, lemma audits, and pairwise isomorphism / rigidity decisions.
//
// Exit codes: 0 the property holds (or plain success), 1 the property fails
// (not isomorphic, no transport, failed validation or audit), 2 input error.
// Results go to stdout (or --output), diagnostics to stderr.

#include "CLI11.hpp"

#include "gkm/cohomology.hpp"
#include "gkm/graph.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/rigidity.hpp"
#include "gkm/transport.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

struct OutputOptions {
  std::string path;
  bool quiet = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--output", out.path, "Write the result JSON to a file instead of stdout");
  cmd->add_flag("--quiet", out.quiet, "Suppress the result JSON");
}

int emit(const json& j, const OutputOptions& out) {
  std::string text = j.dump(2) + "\n";
  if (!out.path.empty()) {
    std::ofstream f(out.path);
    if (!f) {
      std::cerr << "error: cannot write '" << out.path << "'\n";
      return 2;
    }
    f << text;
  } else if (!out.quiet) {
    std::cout << text;
  }
  return 0;
}

gkm::GkmGraph load_validated(const std::string& path) {
  gkm::GkmGraph g = gkm::load_graph_file(path);
  if (!gkm::validate(g).ok())
    throw gkm::GraphFormatError("'" + path + "' fails validation");
  return g;
}

int cmd_validate(const std::string& path, const OutputOptions& out) {
  gkm::GkmGraph g = gkm::load_graph_file(path);
  gkm::ValidationReport report = gkm::validate(g);
  if (int rc = emit(gkm::report_to_json(report), out)) return rc;
  return report.ok() ? 0 : 1;
}

int cmd_transport(const std::string& path, const OutputOptions& out) {
  gkm::GkmGraph g = load_validated(path);
  std::optional<gkm::Transport> t = gkm::find_transport(g);
  json j;
  j["found"] = t.has_value();
  if (t) j["transport"] = gkm::transport_to_json(*t)["transport"];
  if (int rc = emit(j, out)) return rc;
  return t ? 0 : 1;
}

int cmd_cohomology(const std::string& path, int max_cohdeg,
                   const OutputOptions& out) {
  if (max_cohdeg < 0 || max_cohdeg % 2 != 0)
    throw gkm::GraphFormatError("--max-cohdeg must be a nonnegative even integer");
  gkm::GkmGraph g = load_validated(path);
  json j;
  j["max_cohdeg"] = max_cohdeg;
  json ranks = json::array();
  json bases = json::array();
  for (int d = 0; d <= max_cohdeg / 2; ++d) {
    gkm::GradedBasis b = gkm::graded_basis(g, d);
    ranks.push_back(b.rank());
    bases.push_back(gkm::graded_basis_to_json(g, b));
  }
  j["ranks"] = std::move(ranks);
  j["bases"] = std::move(bases);
  return emit(j, out);
}

int cmd_thom(const std::string& path, const OutputOptions& out) {
  gkm::GkmGraph g = load_validated(path);
  json classes;
  for (int p = 0; p < g.num_vertices(); ++p) {
    gkm::CohClass tau = gkm::thom_class(g, p);
    classes[g.vertex_name(p)] = tau.values[static_cast<size_t>(p)].to_string();
  }
  json j;
  j["degree"] = 2 * g.valence();
  j["classes"] = std::move(classes);
  return emit(j, out);
}

int cmd_audit(const std::string& path, const OutputOptions& out) {
  gkm::GkmGraph g = load_validated(path);
  if (!gkm::is_gkm(g))
    throw gkm::GraphFormatError("'" + path +
                                "' admits no parallel transport; audit requires a GKM graph");
  bool all_hold = true;
  json pairs = json::array();
  for (int p = 0; p < g.num_vertices(); ++p) {
    for (int q = p + 1; q < g.num_vertices(); ++q) {
      json entry;
      entry["p"] = g.vertex_name(p);
      entry["q"] = g.vertex_name(q);
      bool adjacent = g.adjacent(p, q);
      entry["adjacent"] = adjacent;

      bool key = true;
      for (int e : g.darts_between(p, q))
        key = key && gkm::key_lemma_check(g, p, q, e);
      entry["key_lemma"] = key;

      bool corollary = !adjacent || gkm::corollary_check(g, p, q);
      entry["corollary"] = corollary;

      bool witness = true;
      try {
        gkm::pq_witness(g, p, q);
      } catch (const std::logic_error&) {
        witness = false;
      }
      entry["witness_identity"] = witness;

      gkm::MaxRResult r = gkm::max_r(g, p, q);
      bool matches = r.body == gkm::normalize_sign(g.p_poly(p, q)).body;
      entry["max_r"] = r.body.to_string();
      entry["max_r_matches"] = matches;

      all_hold = all_hold && key && corollary && witness && matches;
      pairs.push_back(std::move(entry));
    }
  }
  json j;
  j["pairs"] = std::move(pairs);
  j["all_hold"] = all_hold;
  if (int rc = emit(j, out)) return rc;
  return all_hold ? 0 : 1;
}

json witness_json(const gkm::GkmGraph& ga, const gkm::GkmGraph& gb,
                  const std::vector<int>& map) {
  json w;
  for (int v = 0; v < ga.num_vertices(); ++v)
    w[ga.vertex_name(v)] = gb.vertex_name(map[static_cast<size_t>(v)]);
  return w;
}

int cmd_iso(const std::string& path_a, const std::string& path_b,
            const OutputOptions& out) {
  gkm::GkmGraph ga = load_validated(path_a);
  gkm::GkmGraph gb = load_validated(path_b);
  std::optional<gkm::GraphIso> iso = gkm::find_graph_isomorphism(ga, gb);
  json j;
  j["isomorphic"] = iso.has_value();
  j["witness"] = iso ? witness_json(ga, gb, iso->vertex_map) : json(nullptr);
  if (int rc = emit(j, out)) return rc;
  return iso ? 0 : 1;
}

json table_json(const gkm::GkmGraph& g, const gkm::PqTable& t) {
  json entries = json::array();
  for (const auto& [pair, factors] : t.pairs) {
    json e;
    e["p"] = g.vertex_name(pair.first);
    e["q"] = g.vertex_name(pair.second);
    // Linear forms serialize as integer coefficient vectors.
    json fs = json::array();
    for (const gkm::LinearForm& f : factors) {
      json coeffs = json::array();
      for (const gkm::Int& c : f.coeffs()) coeffs.push_back(c.convert_to<long long>());
      fs.push_back(std::move(coeffs));
    }
    e["factors"] = std::move(fs);
    entries.push_back(std::move(e));
  }
  return entries;
}

int cmd_rigidity(const std::string& path_a, const std::string& path_b,
                 const OutputOptions& out) {
  gkm::GkmGraph ga = load_validated(path_a);
  gkm::GkmGraph gb = load_validated(path_b);
  if (!gkm::is_gkm(ga))
    throw gkm::GraphFormatError("'" + path_a + "' is not a GKM graph");
  if (!gkm::is_gkm(gb))
    throw gkm::GraphFormatError("'" + path_b + "' is not a GKM graph");

  gkm::AlgebraData da = gkm::make_algebra_data(ga);
  gkm::AlgebraData db = gkm::make_algebra_data(gb);
  std::optional<std::vector<int>> map = gkm::algebras_isomorphic(da, db);

  json j;
  j["isomorphic"] = map.has_value();
  j["witness"] = map ? witness_json(ga, gb, *map) : json(nullptr);
  j["tables"] = {{"a", table_json(ga, gkm::reconstructed_pq_table(da))},
                 {"b", table_json(gb, gkm::reconstructed_pq_table(db))}};
  if (int rc = emit(j, out)) return rc;
  return map ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for GKM graphs and their graph equivariant cohomology"};
  app.require_subcommand(1);

  std::string path_a, path_b;
  int max_cohdeg = 0;
  OutputOptions out;

  CLI::App* validate = app.add_subcommand("validate", "Check the axial function axioms");
  validate->add_option("file", path_a, "Graph JSON file")->required();
  add_output_options(validate, out);

  CLI::App* transport = app.add_subcommand("transport", "Search for a parallel transport");
  transport->add_option("file", path_a, "Graph JSON file")->required();
  add_output_options(transport, out);

  CLI::App* cohomology =
      app.add_subcommand("cohomology", "Graded bases of the graph equivariant cohomology");
  cohomology->add_option("file", path_a, "Graph JSON file")->required();
  cohomology->add_option("--max-cohdeg", max_cohdeg, "Largest cohomological (even) degree")
      ->required();
  add_output_options(cohomology, out);

  CLI::App* thom = app.add_subcommand("thom", "Equivariant Thom classes");
  thom->add_option("file", path_a, "Graph JSON file")->required();
  add_output_options(thom, out);

  CLI::App* audit =
      app.add_subcommand("audit", "Check the divisibility lemmas on every vertex pair");
  audit->add_option("file", path_a, "Graph JSON file")->required();
  add_output_options(audit, out);

  CLI::App* iso = app.add_subcommand("iso", "Decide GKM-graph isomorphism");
  iso->add_option("a", path_a, "First graph")->required();
  iso->add_option("b", path_b, "Second graph")->required();
  add_output_options(iso, out);

  CLI::App* rigidity = app.add_subcommand(
      "rigidity", "Decide algebra isomorphism by reconstruction from the graded bases");
  rigidity->add_option("a", path_a, "First graph")->required();
  rigidity->add_option("b", path_b, "Second graph")->required();
  add_output_options(rigidity, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(path_a, out);
    if (transport->parsed()) return cmd_transport(path_a, out);
    if (cohomology->parsed()) return cmd_cohomology(path_a, max_cohdeg, out);
    if (thom->parsed()) return cmd_thom(path_a, out);
    if (audit->parsed()) return cmd_audit(path_a, out);
    if (iso->parsed()) return cmd_iso(path_a, path_b, out);
    if (rigidity->parsed()) return cmd_rigidity(path_a, path_b, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
