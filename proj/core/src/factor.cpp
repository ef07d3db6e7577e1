#include "gkm/factor.hpp"

#include "gkm/divide.hpp"
#include "gkm/zmatrix.hpp"

#include <algorithm>
#include <set>

// Splitting a product of linear forms, by induction on the rank r.
//
//   1. Pick an integer direction v = (1, t, t^2, ...) with p(v) != 0 and move
//      it onto the first axis by a unimodular triangular substitution W. In
//      the new coordinates every linear factor that is not a pure x1 multiple
//      has a nonzero x1 coefficient, and the product of those coefficients is
//      the (nonzero) coefficient A1 of x1^deg.
//   2. Strip pure x1 factors by exact division.
//   3. Set x1 = 0: the result is the product of the x1-free parts, a product
//      of linear forms in r-1 variables. Recurse on it.
//   4. Every factor is then c*x1 + d*m with c a divisor of A1, m one of the
//      recursive primitive factors and d a divisor of the recursive scalar.
//      Trial-divide this finite candidate set and undo the substitution.
//
// The search for t is bounded: p(v(t)) is a nonzero polynomial in t of degree
// at most deg(p) * (r-1) whenever p is a product of linear forms, so some
// t <= deg(p) * (r-1) works; if none does, p is not such a product.

namespace gkm {

namespace {

std::vector<Int> positive_divisors(const Int& value) {
  Int a = abs_int(value);
  std::vector<Int> divs;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    divs.push_back(d);
    if (d * d != a) divs.push_back(a / d);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Poly drop_first_variable(const Poly& p) {
  // Requires every term to have x1 exponent 0; reinterprets in rank-1 fewer vars.
  Poly::TermMap terms;
  for (const auto& [m, c] : p.terms())
    terms.emplace(Mono(m.begin() + 1, m.end()), c);
  return Poly::from_terms(p.rank() - 1, std::move(terms));
}

std::optional<LinearFactorization> split_impl(const Poly& p) {
  int r = p.rank();
  auto deg = p.homogeneous_degree();
  if (p.is_zero()) return std::nullopt;
  if (!deg) {
    if (!p.is_homogeneous()) return std::nullopt;
    return LinearFactorization{p.leading_coeff(), {}};
  }
  int n = *deg;

  if (r == 1) {
    LinearFactorization out{p.leading_coeff(), {}};
    out.factors.assign(static_cast<size_t>(n), LinearForm({Int(1)}));
    return out;
  }

  // Genericizing direction.
  std::vector<Int> v;
  bool found = false;
  for (int t = 0; t <= n * (r - 1) && !found; ++t) {
    v.assign(static_cast<size_t>(r), 0);
    Int power(1);
    for (int i = 0; i < r; ++i) {
      v[static_cast<size_t>(i)] = power;
      power *= t;
    }
    if (p.eval(v) != 0) found = true;
  }
  if (!found) return std::nullopt;

  IntMatrix w = identity_matrix(r);
  IntMatrix winv = identity_matrix(r);
  for (int i = 1; i < r; ++i) {
    w[static_cast<size_t>(i)][0] = v[static_cast<size_t>(i)];
    winv[static_cast<size_t>(i)][0] = -v[static_cast<size_t>(i)];
  }
  Poly q = p.substitute(w);

  std::vector<Int> e1(static_cast<size_t>(r), 0);
  e1[0] = 1;
  const LinearForm x1(std::move(e1));

  std::vector<LinearForm> found_factors;  // in the w coordinates
  while (!q.is_zero() && divides_linear(x1, q)) {
    q = div_exact_linear(x1, q);
    found_factors.push_back(x1);
  }
  if (q.total_degree() > 0) {
    Mono corner(static_cast<size_t>(r), 0);
    corner[0] = q.total_degree();
    Int a1 = q.coeff(corner);
    if (a1 == 0) return std::nullopt;  // cannot happen for genuine products

    Poly q0 = q;
    {
      Poly::TermMap low;
      for (const auto& [m, c] : q.terms())
        if (m[0] == 0) low.emplace(m, c);
      q0 = Poly::from_terms(r, std::move(low));
    }
    if (q0.is_zero()) return std::nullopt;
    auto rec = split_impl(drop_first_variable(q0));
    if (!rec) return std::nullopt;

    std::set<std::vector<Int>> seen;
    std::vector<LinearForm> candidates;
    for (const LinearForm& mhat : rec->factors) {
      for (const Int& c : positive_divisors(a1)) {
        for (const Int& d : positive_divisors(rec->scalar)) {
          for (int sign : {+1, -1}) {
            std::vector<Int> coeffs(static_cast<size_t>(r), 0);
            coeffs[0] = c;
            for (int i = 1; i < r; ++i)
              coeffs[static_cast<size_t>(i)] =
                  sign * d * mhat.coeff(i - 1);
            LinearForm cand(std::move(coeffs));
            if (!cand.is_primitive()) continue;
            if (seen.insert(cand.coeffs()).second) candidates.push_back(cand);
          }
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const LinearForm& cand : candidates) {
      while (!q.is_zero() && q.total_degree() > 0 && divides_linear(cand, q)) {
        q = div_exact_linear(cand, q);
        found_factors.push_back(cand);
      }
    }
    if (q.total_degree() != 0) return std::nullopt;
  }

  // Undo the substitution and verify against the original polynomial.
  LinearFactorization out{Int(0), {}};
  Poly rest = p;
  for (const LinearForm& f : found_factors) {
    LinearForm orig(row_times_matrix(f.coeffs(), winv));
    auto [s, body] = orig.normalized();
    if (!divides_linear(body, rest)) return std::nullopt;
    rest = div_exact_linear(body, rest);
    out.factors.push_back(body);
  }
  if (rest.total_degree() != 0) return std::nullopt;
  out.scalar = rest.leading_coeff();
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace

std::optional<LinearFactorization> split_linear_factors(const Poly& p) {
  if (p.is_zero() || !p.is_homogeneous()) return std::nullopt;
  return split_impl(p);
}

}  // namespace gkm
