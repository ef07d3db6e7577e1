#pragma once

#include "gkm/cohomology.hpp"
#include "gkm/factor.hpp"
#include "gkm/graph.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gkm {

// Per unordered vertex pair, the multiset of sign-normalized primitive linear
// factors of P_pq (empty for non-adjacent pairs). Two P products agree up to
// sign exactly when their factor multisets agree, by unique factorization.
struct PqTable {
  int num_vertices = 0;
  std::map<std::pair<int, int>, std::vector<LinearForm>> pairs;
};

PqTable pq_table(const GkmGraph& g);

// A GKM-graph isomorphism: a vertex bijection of the first (primed) graph
// onto the second with P_{phi(p')phi(q')} == +-P_{p'q'} for all pairs.
struct GraphIso {
  std::vector<int> vertex_map;  // vertex of g' -> vertex of g
};

// Backtracking over vertices in index order, pruned by the multiset of a
// vertex's incident factor multisets; deterministic.
std::optional<std::vector<int>> find_table_isomorphism(const PqTable& primed,
                                                       const PqTable& base);
std::optional<GraphIso> find_graph_isomorphism(const GkmGraph& gp,
                                               const GkmGraph& g);
bool verify_table_isomorphism(const PqTable& primed, const PqTable& base,
                              const std::vector<int>& map);

// phi^*(f)(p') = f(phi(p')); a graded algebra map. Membership of the result
// is a theorem, so its failure throws.
CohClass pullback(const GraphIso& iso, const GkmGraph& gp, const GkmGraph& g,
                  const CohClass& f);

struct MaxRResult {
  Poly body;                        // sign-normalized
  std::vector<LinearForm> factors;  // sign-normalized, sorted
};

// A maximal-degree R such that R^2 * g == tau_p^2 + tau_q^2 for some class g.
// Candidates are the sub-products of the factor list of tau_p(p): any valid R
// divides tau_p(p), since g(p) = (tau_p(p)/R)^2 must be a polynomial and
// content-1 linear factors are forced. The result equals +-P_pq.
MaxRResult max_r(const GkmGraph& g, int p, int q);

struct AlgebraDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The carrier for "the algebra alone": graded integer bases with vertex
// identities replaced by opaque point indices. Degrees 0 .. 2 * valence
// suffice for every reconstruction step.
struct AlgebraData {
  int rank = 0;
  int valence = 0;
  int num_points = 0;
  std::vector<GradedBasis> bases;  // bases[d] has polynomial degree d
};

// anon_to_vertex[i] is the graph vertex presented as point i.
AlgebraData make_algebra_data(const GkmGraph& g,
                              const std::vector<int>& anon_to_vertex);
AlgebraData make_algebra_data(const GkmGraph& g);

// Is the tuple of values an integer combination of the degree-d basis?
bool lattice_member(const AlgebraData& data, const std::vector<Poly>& values,
                    int degree);

// One degree-n class per point, supported exactly there: the equivariant Thom
// classes up to sign, recovered as generators of the rank-1 saturated
// lattices of singly-supported classes. Failure on data produced from a GKM
// graph is a bug in the data, hence an error.
std::vector<CohClass> recover_vertices(const AlgebraData& data);

// The +-P table recovered from the algebra alone: factor the recovered Thom
// values and run the max_r search with lattice membership in place of the
// edge-divisibility test.
PqTable reconstructed_pq_table(const AlgebraData& data);

// The main theorem, algorithmically: recover both tables and search for a
// bijection matching them. Unequal rank, valence or point counts yield no
// isomorphism.
std::optional<std::vector<int>> algebras_isomorphic(const AlgebraData& a,
                                                    const AlgebraData& b);

}  // namespace gkm
