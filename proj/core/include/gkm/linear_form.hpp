#pragma once

#include "gkm/int_types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gkm {

class Poly;

// A degree-2 element of H^*(BT): an integer linear form c1*x1 + ... + cr*xr.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Int> coeffs);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

  bool is_zero() const;
  // gcd of the coefficients is 1 (false for the zero form).
  bool is_primitive() const;
  Int content() const;

  LinearForm negated() const;
  // (sign, body) with body's first nonzero coefficient positive;
  // sign * body == *this. Zero maps to (+1, zero).
  std::pair<int, LinearForm> normalized() const;

  Poly to_poly() const;
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  // Lexicographic coefficient order; used for sorting factor multisets.
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ < b.coeffs_;
  }

 private:
  std::vector<Int> coeffs_;
};

// True iff the 2 x r matrix [a; b] has rank 2, i.e. some 2x2 minor is nonzero.
// Rejects zero forms and rank mismatches.
bool lf_independent(const LinearForm& a, const LinearForm& b);

}  // namespace gkm
