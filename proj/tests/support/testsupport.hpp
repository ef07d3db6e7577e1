#pragma once

#include "gkm/cohomology.hpp"
#include "gkm/graph.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/transport.hpp"
#include "gkm/zmatrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <string>
#include <vector>

namespace gkmtest {

using Rat = boost::multiprecision::cpp_rational;
using Rng = std::mt19937_64;

std::string fixture_path(const std::string& name);
gkm::GkmGraph load_fixture(const std::string& name);
nlohmann::json load_fixture_json(const std::string& name);

// Fixtures that carry an axial function and a parallel transport.
const std::vector<std::string>& gkm_fixture_names();

int rand_int(Rng& rng, int lo, int hi);
gkm::Int rand_coeff(Rng& rng, int bound);
gkm::Poly random_poly(Rng& rng, int rank, int max_degree, int max_terms, int bound);
gkm::Poly random_homogeneous_poly(Rng& rng, int rank, int degree, int bound);
gkm::LinearForm random_primitive_form(Rng& rng, int rank, int bound);
std::vector<gkm::Int> random_point(Rng& rng, int rank, int bound);

// ---- Independent oracle: rational kernel of the edge conditions ----
//
// Divisibility of f(i(e)) - f(t(e)) by a primitive alpha(e) is equivalent to
// vanishing after the rational substitution that solves alpha = 0 for its
// last nonzero variable. This route shares nothing with the unimodular
// integer reduction used by the library.
size_t oracle_kernel_dimension(const gkm::GkmGraph& g, int degree);
bool oracle_satisfies_constraints(const gkm::GkmGraph& g, const gkm::CohClass& f);

// Diagonalization by unimodular row and column operations. For a full-rank
// basis matrix, the rows span a saturated lattice iff the product of the
// diagonal is a unit.
std::vector<gkm::Int> diagonalize_unimodular(gkm::IntMatrix m);
bool is_saturated_basis(const std::vector<std::vector<gkm::Int>>& rows);

std::vector<gkm::Int> class_vector(const gkm::CohClass& f,
                                   const std::vector<gkm::Mono>& monos);

// Full oracle for one graded piece: rank agreement with the rational kernel,
// constraint satisfaction of every basis class, and saturation.
bool oracle_check_graded_basis(const gkm::GkmGraph& g, int degree,
                               std::string* why = nullptr);

// ---- Independent oracle: exhaustive transport enumeration ----
//
// Enumerates every family of per-dart bijections satisfying all three
// transport conditions, by brute force over one bijection per undirected
// edge (the inverse condition forces the other dart, and compatibility is
// checked on both darts explicitly). Intended for valence <= 3.
std::vector<gkm::Transport> all_transports_bruteforce(const gkm::GkmGraph& g);

bool transport_less(const gkm::Transport& a, const gkm::Transport& b);

// ---- Positive-control perturbations ----

// Reorders the vertex declarations by a random permutation and negates the
// labels of a random subset of edges, retrying until the result still admits
// a transport (negating every edge always does).
nlohmann::json relabel_and_flip(const nlohmann::json& fixture, Rng& rng);

std::vector<int> random_permutation(Rng& rng, int n);

// ---- Running the command line tool ----

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace gkmtest
