#include "gkm/linear_form.hpp"

#include "gkm/poly.hpp"

#include <stdexcept>

namespace gkm {

ExtGcd ext_gcd(Int a, Int b) {
  // Invariants: old_r == old_s*a + old_t*b, r == s*a + t*b.
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Int gcd_all(const std::vector<Int>& v) {
  Int g(0);
  for (const Int& x : v) g = gcd_int(g, x);
  return g;
}

LinearForm::LinearForm(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("linear form: rank must be positive");
}

bool LinearForm::is_zero() const {
  for (const Int& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Int LinearForm::content() const { return gcd_all(coeffs_); }

bool LinearForm::is_primitive() const { return content() == 1; }

LinearForm LinearForm::negated() const {
  std::vector<Int> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return LinearForm(std::move(c));
}

std::pair<int, LinearForm> LinearForm::normalized() const {
  for (const Int& c : coeffs_) {
    if (c == 0) continue;
    return c > 0 ? std::make_pair(+1, *this) : std::make_pair(-1, negated());
  }
  return {+1, *this};
}

Poly LinearForm::to_poly() const {
  Poly p(rank());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    p += Poly::variable(rank(), static_cast<int>(i)).times(coeffs_[i]);
  }
  return p;
}

std::string LinearForm::to_string() const { return to_poly().to_string(); }

bool lf_independent(const LinearForm& a, const LinearForm& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("lf_independent: rank mismatch");
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("lf_independent: zero form");
  int r = a.rank();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (a.coeff(i) * b.coeff(j) - a.coeff(j) * b.coeff(i) != 0) return true;
  return false;
}

}  // namespace gkm
