#pragma once

#include "gkm/int_types.hpp"
#include "gkm/linear_form.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkm {

// Exponent vector of a monomial; length == rank of the ambient ring.
using Mono = std::vector<int>;

int mono_degree(const Mono& m);

// Graded-lexicographic order with x1 > x2 > ... > xr. Fixed once; used for
// sign normalization, canonical text output and deterministic iteration.
bool grlex_greater(const Mono& a, const Mono& b);

struct GrlexDesc {
  bool operator()(const Mono& a, const Mono& b) const {
    return grlex_greater(a, b);
  }
};

// Sparse multivariate polynomial over Z. Terms are kept in descending
// graded-lexicographic order; zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Mono, Int, GrlexDesc>;

  explicit Poly(int rank);  // zero polynomial
  static Poly constant(int rank, Int c);
  static Poly variable(int rank, int index);
  static Poly from_terms(int rank, TermMap terms);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // -1 for the zero polynomial.
  int total_degree() const;
  // Degree if nonzero and homogeneous, nullopt otherwise (including zero).
  std::optional<int> homogeneous_degree() const;
  // Every term has degree d; the zero polynomial is homogeneous of any degree.
  bool is_homogeneous() const;

  const Int& coeff(const Mono& m) const;  // 0 if absent
  Int leading_coeff() const;              // 0 for zero

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly times(const Int& c) const;

  Int content() const;  // gcd of coefficients, 0 for zero
  Int eval(const std::vector<Int>& point) const;

  // x_i -> sum_j m[i][j] * x_j for a square integer matrix m.
  Poly substitute(const std::vector<std::vector<Int>>& m) const;

  // Canonical text, terms in descending grlex order: "x1^2 - 2*x1*x2 + x2^2".
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_;
  TermMap terms_;
  void add_term(const Mono& m, const Int& c);
};

// (sign, body): sign * body == p and body's leading coefficient under the
// grlex order is positive. Zero maps to (+1, 0). The canonical representative
// for comparisons "up to sign".
struct SignNormalized {
  int sign;
  Poly body;
};

SignNormalized normalize_sign(const Poly& p);

Poly poly_mul(const Poly& a, const Poly& b);
Int content(const Poly& p);

// Total order on polynomials of one rank: compares the term sequences under
// the grlex term order (monomial first, then coefficient). Only used for
// deterministic tie-breaking.
bool poly_less(const Poly& a, const Poly& b);

// All exponent vectors of the given total degree, in descending grlex order.
std::vector<Mono> monomials_of_degree(int rank, int degree);

}  // namespace gkm
