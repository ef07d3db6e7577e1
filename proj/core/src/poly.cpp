#include "gkm/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gkm {

int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool grlex_greater(const Mono& a, const Mono& b) {
  int da = mono_degree(a);
  int db = mono_degree(b);
  if (da != db) return da > db;
  // Same degree: x1 beats x2 beats ..., so the first differing exponent wins.
  return a > b;
}

Poly::Poly(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("poly: rank must be positive");
}

Poly Poly::constant(int rank, Int c) {
  Poly p(rank);
  if (c != 0) p.terms_.emplace(Mono(static_cast<size_t>(rank), 0), std::move(c));
  return p;
}

Poly Poly::variable(int rank, int index) {
  if (index < 0 || index >= rank)
    throw std::invalid_argument("poly: variable index out of range");
  Poly p(rank);
  Mono m(static_cast<size_t>(rank), 0);
  m[static_cast<size_t>(index)] = 1;
  p.terms_.emplace(std::move(m), Int(1));
  return p;
}

Poly Poly::from_terms(int rank, TermMap terms) {
  Poly p(rank);
  for (auto& [m, c] : terms) {
    if (static_cast<int>(m.size()) != rank)
      throw std::invalid_argument("poly: monomial length != rank");
    for (int e : m)
      if (e < 0) throw std::invalid_argument("poly: negative exponent");
    if (c != 0) p.terms_.emplace(m, c);
  }
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = mono_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) != d) return std::nullopt;
  return d;
}

bool Poly::is_homogeneous() const {
  return terms_.empty() || homogeneous_degree().has_value();
}

const Int& Poly::coeff(const Mono& m) const {
  static const Int zero(0);
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

Int Poly::leading_coeff() const {
  return terms_.empty() ? Int(0) : terms_.begin()->second;
}

void Poly::add_term(const Mono& m, const Int& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(rank_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("poly: rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("poly: rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("poly: rank mismatch");
  Poly r(a.rank_);
  Mono m(static_cast<size_t>(a.rank_), 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::times(const Int& c) const {
  Poly r(rank_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Int Poly::content() const {
  Int g(0);
  for (const auto& [m, c] : terms_) g = gcd_int(g, c);
  return g;
}

Int Poly::eval(const std::vector<Int>& point) const {
  if (static_cast<int>(point.size()) != rank_)
    throw std::invalid_argument("poly: eval point length != rank");
  Int total(0);
  for (const auto& [m, c] : terms_) {
    Int t = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    total += t;
  }
  return total;
}

Poly Poly::substitute(const std::vector<std::vector<Int>>& mat) const {
  if (static_cast<int>(mat.size()) != rank_)
    throw std::invalid_argument("poly: substitution matrix must be rank x rank");
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(rank_));
  for (const auto& row : mat) {
    if (static_cast<int>(row.size()) != rank_)
      throw std::invalid_argument("poly: substitution matrix must be rank x rank");
    images.push_back(LinearForm(row).to_poly());
  }
  Poly r(rank_);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(rank_, c);
    for (size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t = t * images[i];
    r += t;
  }
  return r;
}

namespace {

std::string mono_string(const Mono& m) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  return os.str();
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = abs_int(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string ms = mono_string(m);
    if (ms.empty()) {
      os << a.str();
    } else if (a == 1) {
      os << ms;
    } else {
      os << a.str() << "*" << ms;
    }
  }
  return os.str();
}

SignNormalized normalize_sign(const Poly& p) {
  if (p.is_zero() || p.leading_coeff() > 0) return {+1, p};
  return {-1, -p};
}

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

Int content(const Poly& p) { return p.content(); }

bool poly_less(const Poly& a, const Poly& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("poly: rank mismatch");
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return grlex_greater(ib->first, ia->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

std::vector<Mono> monomials_of_degree(int rank, int degree) {
  if (rank < 1 || degree < 0)
    throw std::invalid_argument("monomials_of_degree: bad arguments");
  std::vector<Mono> out;
  Mono cur(static_cast<size_t>(rank), 0);
  // Recursive enumeration emits descending lex within the fixed degree,
  // which is descending grlex.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == rank - 1) {
      cur[static_cast<size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace gkm
