#pragma once

#include "gkm/int_types.hpp"

#include <optional>
#include <vector>

namespace gkm {

// Dense integer matrices, row-major. Small sizes only.
using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(int n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
bool is_identity(const IntMatrix& m);
std::vector<Int> row_times_matrix(const std::vector<Int>& row, const IntMatrix& m);

// Basis of { x in Z^ncols : a*x = 0 }, computed by unimodular column
// reduction. The kernel of an integer matrix is a saturated lattice, so the
// returned vectors generate every integer solution.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a, int ncols);

// An integer solution x of a*x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b);

}  // namespace gkm
