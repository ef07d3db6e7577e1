#pragma once

#include "gkm/linear_form.hpp"
#include "gkm/poly.hpp"

#include <optional>
#include <vector>

namespace gkm {

// p == scalar * product(factors); factors are primitive and sign-normalized,
// sorted by coefficient vector.
struct LinearFactorization {
  Int scalar;
  std::vector<LinearForm> factors;
};

// Splits a polynomial that is a product of linear forms into its primitive
// linear factors. Returns nullopt when p is zero, inhomogeneous, or not such
// a product. This is not a general factorization routine: it is only ever
// applied to polynomials known to be products of linear forms (values of
// equivariant Thom classes), and it verifies that structure exactly.
std::optional<LinearFactorization> split_linear_factors(const Poly& p);

}  // namespace gkm
