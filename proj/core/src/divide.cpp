#include "gkm/divide.hpp"

#include <stdexcept>

namespace gkm {

FirstVariableChange unimodular_to_first(const LinearForm& a) {
  if (!a.is_primitive())
    throw std::invalid_argument("unimodular_to_first: form must be primitive");
  int r = a.rank();
  size_t n = static_cast<size_t>(r);
  IntMatrix u = identity_matrix(r);
  IntMatrix uinv = identity_matrix(r);
  std::vector<Int> v = a.coeffs();  // invariant: a * u == v

  auto swap_cols = [&](size_t i, size_t j) {
    if (i == j) return;
    for (auto& row : u) std::swap(row[i], row[j]);
    std::swap(uinv[i], uinv[j]);
    std::swap(v[i], v[j]);
  };

  if (v[0] == 0) {
    for (size_t j = 1; j < n; ++j)
      if (v[j] != 0) {
        swap_cols(0, j);
        break;
      }
  }
  for (size_t j = 1; j < n; ++j) {
    if (v[j] == 0) continue;
    ExtGcd eg = ext_gcd(v[0], v[j]);
    Int p0 = v[0] / eg.g;
    Int pj = v[j] / eg.g;
    // Right-multiply by [[x, -pj], [y, p0]] on columns (0, j); det == 1.
    for (auto& row : u) {
      Int c0 = row[0] * eg.x + row[j] * eg.y;
      Int cj = row[0] * -pj + row[j] * p0;
      row[0] = std::move(c0);
      row[j] = std::move(cj);
    }
    // Left-multiply the inverse by [[p0, pj], [-y, x]] on rows (0, j).
    for (size_t k = 0; k < n; ++k) {
      Int r0 = p0 * uinv[0][k] + pj * uinv[j][k];
      Int rj = -eg.y * uinv[0][k] + eg.x * uinv[j][k];
      uinv[0][k] = std::move(r0);
      uinv[j][k] = std::move(rj);
    }
    v[0] = eg.g;
    v[j] = 0;
  }
  if (v[0] < 0) {
    for (auto& row : u) row[0] = -row[0];
    for (auto& c : uinv[0]) c = -c;
    v[0] = -v[0];
  }
  if (v[0] != 1)
    throw std::logic_error("unimodular_to_first: reduction did not reach 1");
  return {std::move(u), std::move(uinv)};
}

bool divides_linear(const LinearForm& a, const Poly& p) {
  if (a.rank() != p.rank())
    throw std::invalid_argument("divides_linear: rank mismatch");
  if (p.is_zero()) return true;
  FirstVariableChange ch = unimodular_to_first(a);
  Poly t = p.substitute(ch.fwd);
  for (const auto& [m, c] : t.terms())
    if (m[0] == 0) return false;
  return true;
}

Poly div_exact_linear(const LinearForm& a, const Poly& p) {
  if (a.rank() != p.rank())
    throw std::invalid_argument("div_exact_linear: rank mismatch");
  if (p.is_zero()) return p;
  FirstVariableChange ch = unimodular_to_first(a);
  Poly t = p.substitute(ch.fwd);
  Poly::TermMap quotient;
  for (const auto& [m, c] : t.terms()) {
    if (m[0] == 0)
      throw std::domain_error("div_exact_linear: polynomial is not divisible");
    Mono q = m;
    --q[0];
    quotient.emplace(std::move(q), c);
  }
  return Poly::from_terms(p.rank(), std::move(quotient)).substitute(ch.inv);
}

}  // namespace gkm
