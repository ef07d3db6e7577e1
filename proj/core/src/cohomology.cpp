#include "gkm/cohomology.hpp"

#include "gkm/divide.hpp"
#include "gkm/zmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

std::vector<int> CohClass::support() const {
  std::vector<int> s;
  for (size_t v = 0; v < values.size(); ++v)
    if (!values[v].is_zero()) s.push_back(static_cast<int>(v));
  return s;
}

bool CohClass::is_zero() const { return support().empty(); }

namespace {

// Common homogeneous degree of the nonzero values; -1 when all are zero.
// Throws on inhomogeneous or mixed-degree input.
int common_degree(const GkmGraph& g, const std::vector<Poly>& values) {
  if (static_cast<int>(values.size()) != g.num_vertices())
    throw std::invalid_argument("class: one value per vertex required");
  int degree = -1;
  for (const Poly& p : values) {
    if (p.rank() != g.rank())
      throw std::invalid_argument("class: value rank mismatch");
    if (p.is_zero()) continue;
    auto d = p.homogeneous_degree();
    if (!d) throw std::invalid_argument("class: values must be homogeneous");
    if (degree == -1) degree = *d;
    if (*d != degree)
      throw std::invalid_argument("class: values have mixed degrees");
  }
  return degree;
}

}  // namespace

bool is_class(const GkmGraph& g, const std::vector<Poly>& values) {
  common_degree(g, values);
  for (const Dart& d : g.darts()) {
    if (d.id > d.reverse) continue;
    Poly diff = values[static_cast<size_t>(d.from)] - values[static_cast<size_t>(d.to)];
    if (!divides_linear(d.alpha, diff)) return false;
  }
  return true;
}

bool is_class(const GkmGraph& g, const CohClass& f) { return is_class(g, f.values); }

CohClass make_class(const GkmGraph& g, std::vector<Poly> values) {
  int d = common_degree(g, values);
  return {std::move(values), d < 0 ? 0 : d};
}

CohClass thom_class(const GkmGraph& g, int p) {
  Poly prod = Poly::constant(g.rank(), 1);
  for (int e : g.darts_from(p)) prod = prod * g.dart(e).alpha.to_poly();
  std::vector<Poly> values(static_cast<size_t>(g.num_vertices()), Poly(g.rank()));
  values[static_cast<size_t>(p)] = std::move(prod);
  return {std::move(values), g.valence()};
}

CohClass class_add(const CohClass& f, const CohClass& h) {
  if (f.values.size() != h.values.size())
    throw std::invalid_argument("class_add: different graphs");
  if (!f.is_zero() && !h.is_zero() && f.degree != h.degree)
    throw std::invalid_argument("class_add: degree mismatch");
  CohClass out{f.values, f.is_zero() ? h.degree : f.degree};
  for (size_t v = 0; v < out.values.size(); ++v) out.values[v] += h.values[v];
  return out;
}

CohClass class_mul(const CohClass& f, const CohClass& h) {
  if (f.values.size() != h.values.size())
    throw std::invalid_argument("class_mul: different graphs");
  CohClass out{f.values, f.degree + h.degree};
  for (size_t v = 0; v < out.values.size(); ++v)
    out.values[v] = out.values[v] * h.values[v];
  return out;
}

CohClass class_scale(const Poly& s, const CohClass& f) {
  auto d = s.homogeneous_degree();
  if (!d && !s.is_zero())
    throw std::invalid_argument("class_scale: scalar must be homogeneous");
  CohClass out{f.values, f.degree + (d ? *d : 0)};
  for (Poly& v : out.values) v = v * s;
  return out;
}

GradedBasis graded_basis(const GkmGraph& g, int degree) {
  if (degree < 0) throw std::invalid_argument("graded_basis: negative degree");
  if (!validate(g).ok())
    throw std::invalid_argument("graded_basis: graph fails validation");

  const int r = g.rank();
  const int nv = g.num_vertices();
  const std::vector<Mono> monos = monomials_of_degree(r, degree);
  const int m = static_cast<int>(monos.size());
  const int ncols = nv * m;

  IntMatrix rows;
  for (const Dart& d : g.darts()) {
    if (d.id > d.reverse) continue;
    FirstVariableChange ch = unimodular_to_first(d.alpha);
    // Transformed images of the degree-d monomials under x -> fwd * x.
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(m));
    for (const Mono& mono : monos) {
      Poly::TermMap t;
      t.emplace(mono, Int(1));
      images.push_back(Poly::from_terms(r, std::move(t)).substitute(ch.fwd));
    }
    // One row per degree-d monomial with zero x1 exponent: the coefficient of
    // that monomial in the transformed difference must vanish.
    for (const Mono& target : monos) {
      if (target[0] != 0) continue;
      std::vector<Int> row(static_cast<size_t>(ncols), 0);
      bool nonzero = false;
      for (int k = 0; k < m; ++k) {
        const Int& c = images[static_cast<size_t>(k)].coeff(target);
        if (c == 0) continue;
        row[static_cast<size_t>(d.from * m + k)] += c;
        row[static_cast<size_t>(d.to * m + k)] -= c;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  std::vector<std::vector<Int>> kernel = integer_kernel(rows, ncols);

  GradedBasis out{degree, {}};
  for (const std::vector<Int>& vec : kernel) {
    std::vector<Poly> values;
    values.reserve(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) {
      Poly::TermMap t;
      for (int k = 0; k < m; ++k) {
        const Int& c = vec[static_cast<size_t>(v * m + k)];
        if (c != 0) t.emplace(monos[static_cast<size_t>(k)], c);
      }
      values.push_back(Poly::from_terms(r, std::move(t)));
    }
    out.basis.push_back({std::move(values), degree});
  }
  return out;
}

nlohmann::json graded_basis_to_json(const GkmGraph& g, const GradedBasis& b) {
  nlohmann::json j;
  j["degree"] = 2 * b.degree;
  j["rank"] = b.rank();
  nlohmann::json basis = nlohmann::json::array();
  for (const CohClass& f : b.basis) {
    nlohmann::json entry;
    for (int v = 0; v < g.num_vertices(); ++v)
      entry[g.vertex_name(v)] = f.values[static_cast<size_t>(v)].to_string();
    basis.push_back(std::move(entry));
  }
  j["basis"] = std::move(basis);
  return j;
}

bool key_lemma_check(const GkmGraph& g, int p, int q, int e) {
  std::vector<int> between = g.darts_between(p, q);
  if (std::find(between.begin(), between.end(), e) == between.end())
    throw std::invalid_argument("key_lemma_check: dart not in E_pq");
  auto [pp, qq] = g.pq_local(p, q);
  Poly target = (g.c_count(e) % 2 == 0) ? pp - qq : pp + qq;
  return divides_linear(g.dart(e).alpha, target);
}

namespace {

bool product_divides(const GkmGraph& g, const std::vector<int>& darts, Poly target) {
  for (int e : darts) {
    const LinearForm& a = g.dart(e).alpha;
    if (!divides_linear(a, target)) return false;
    target = div_exact_linear(a, target);
  }
  return true;
}

}  // namespace

bool corollary_check(const GkmGraph& g, int p, int q) {
  auto [even, odd] = g.eo_partition(p, q);
  auto [pp, qq] = g.pq_local(p, q);
  return product_divides(g, even, pp - qq) && product_divides(g, odd, pp + qq);
}

CohClass pq_witness(const GkmGraph& g, int p, int q) {
  if (p == q) throw std::invalid_argument("pq_witness: p == q");
  auto [pp, qq] = g.pq_local(p, q);
  std::vector<Poly> values(static_cast<size_t>(g.num_vertices()), Poly(g.rank()));
  values[static_cast<size_t>(p)] = pp * pp;
  values[static_cast<size_t>(q)] = qq * qq;
  CohClass f = make_class(g, std::move(values));
  if (!is_class(g, f))
    throw std::logic_error("pq_witness: witness is not a class");
  Poly ppq = g.p_poly(p, q);
  Poly square = ppq * ppq;
  CohClass tp = thom_class(g, p);
  CohClass tq = thom_class(g, q);
  for (int v = 0; v < g.num_vertices(); ++v) {
    Poly lhs = square * f.values[static_cast<size_t>(v)];
    Poly rhs = tp.values[static_cast<size_t>(v)] * tp.values[static_cast<size_t>(v)] +
               tq.values[static_cast<size_t>(v)] * tq.values[static_cast<size_t>(v)];
    if (!(lhs == rhs))
      throw std::logic_error("pq_witness: identity P_pq^2 f == tau_p^2 + tau_q^2 fails");
  }
  return f;
}

}  // namespace gkm
