#pragma once

#include "gkm/linear_form.hpp"
#include "gkm/poly.hpp"
#include "gkm/zmatrix.hpp"

namespace gkm {

// Unimodular change of variables sending a primitive linear form to x1.
//
// Convention: substituting `fwd` into a polynomial p (x_i -> row i of fwd,
// i.e. p |-> p(fwd * x)) maps the form a to exactly x1; as row vectors,
// a * fwd == e1. `inv` is the integer inverse, fwd * inv == identity.
struct FirstVariableChange {
  IntMatrix fwd;
  IntMatrix inv;
};

// Built by extended-gcd column reduction; requires a primitive.
FirstVariableChange unimodular_to_first(const LinearForm& a);

// p lies in the ideal generated by a over Z. Requires a primitive; all
// arithmetic stays in the integers: after the unimodular change of variables
// this is "every monomial has positive x1 exponent".
bool divides_linear(const LinearForm& a, const Poly& p);

// The exact quotient q with a*q == p. Throws std::domain_error when a does
// not divide p; never truncates.
Poly div_exact_linear(const LinearForm& a, const Poly& p);

}  // namespace gkm
