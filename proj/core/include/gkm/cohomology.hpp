#pragma once

#include "gkm/graph.hpp"
#include "gkm/poly.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace gkm {

// A vertex-indexed tuple of homogeneous polynomials of one polynomial degree
// (cohomological degree 2 * degree); zero values are allowed at any vertex.
struct CohClass {
  std::vector<Poly> values;
  int degree;

  std::vector<int> support() const;
  bool is_zero() const;
};

// The defining divisibility of graph equivariant cohomology on every edge.
// One dart per edge suffices: alpha(reverse e) = +-alpha(e) generates the
// same ideal. Throws on inhomogeneous or mixed-degree input.
bool is_class(const GkmGraph& g, const std::vector<Poly>& values);
bool is_class(const GkmGraph& g, const CohClass& f);

CohClass make_class(const GkmGraph& g, std::vector<Poly> values);

// tau_p: the product of all labels at p, supported at p alone.
CohClass thom_class(const GkmGraph& g, int p);

CohClass class_add(const CohClass& f, const CohClass& h);
CohClass class_mul(const CohClass& f, const CohClass& h);
// Scalar action of H^*(BT): multiply every value by a homogeneous polynomial.
CohClass class_scale(const Poly& s, const CohClass& f);

// An integer lattice basis of the degree-d component (polynomial degree d,
// cohomological degree 2d).
struct GradedBasis {
  int degree;
  std::vector<CohClass> basis;
  size_t rank() const { return basis.size(); }
};

// Unknowns are the monomial coefficients of f(p); every edge contributes the
// degree-d component of the quotient projection Z[x]/<alpha(e)>, realized by
// a unimodular change of variables. The kernel of the stacked integer matrix
// is computed by unimodular column reduction and is automatically saturated.
GradedBasis graded_basis(const GkmGraph& g, int degree);

nlohmann::json graded_basis_to_json(const GkmGraph& g, const GradedBasis& b);

// P - (-1)^{c(e)} Q is divisible by alpha(e), for e in E_pq.
bool key_lemma_check(const GkmGraph& g, int p, int q, int e);

// P - Q and P + Q are divisible by the products of labels over the even and
// odd parts of E_pq; requires p, q adjacent. Division proceeds factor by
// factor, using that distinct labels at a vertex are coprime primes.
bool corollary_check(const GkmGraph& g, int p, int q);

// The class with value P^2 at p, Q^2 at q and 0 elsewhere. Checks membership
// and the identity P_pq^2 * f == tau_p^2 + tau_q^2 pointwise; a failure of
// either is a bug, not an input error.
CohClass pq_witness(const GkmGraph& g, int p, int q);

}  // namespace gkm
