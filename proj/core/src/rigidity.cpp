#include "gkm/rigidity.hpp"

#include "gkm/divide.hpp"
#include "gkm/transport.hpp"
#include "gkm/zmatrix.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gkm {

PqTable pq_table(const GkmGraph& g) {
  if (!validate(g).ok())
    throw std::invalid_argument("pq_table: graph fails validation");
  PqTable t;
  t.num_vertices = g.num_vertices();
  for (int p = 0; p < g.num_vertices(); ++p) {
    for (int q = p + 1; q < g.num_vertices(); ++q) {
      std::vector<LinearForm> factors;
      for (int e : g.darts_between(p, q))
        factors.push_back(g.dart(e).alpha.normalized().second);
      std::sort(factors.begin(), factors.end());
      t.pairs.emplace(std::make_pair(p, q), std::move(factors));
    }
  }
  return t;
}

namespace {

const std::vector<LinearForm>& table_at(const PqTable& t, int a, int b) {
  return t.pairs.at(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
}

// Multiset of the factor multisets incident to v; equal for matched vertices
// under any table isomorphism.
std::vector<std::vector<LinearForm>> vertex_invariant(const PqTable& t, int v) {
  std::vector<std::vector<LinearForm>> inv;
  for (int w = 0; w < t.num_vertices; ++w)
    if (w != v) inv.push_back(table_at(t, v, w));
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace

std::optional<std::vector<int>> find_table_isomorphism(const PqTable& primed,
                                                       const PqTable& base) {
  if (primed.num_vertices != base.num_vertices) return std::nullopt;
  const int n = primed.num_vertices;

  std::vector<std::vector<std::vector<LinearForm>>> inv_primed, inv_base;
  for (int v = 0; v < n; ++v) {
    inv_primed.push_back(vertex_invariant(primed, v));
    inv_base.push_back(vertex_invariant(base, v));
  }

  // Vertices are placed in invariant order (ties by index), so vertices with
  // rare invariants are pinned down early.
  std::vector<int> order(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inv_primed[static_cast<size_t>(a)] != inv_primed[static_cast<size_t>(b)])
      return inv_primed[static_cast<size_t>(a)] < inv_primed[static_cast<size_t>(b)];
    return a < b;
  });

  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::function<bool(int)> place = [&](int step) -> bool {
    if (step == n) return true;
    int vp = order[static_cast<size_t>(step)];
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      if (inv_primed[static_cast<size_t>(vp)] != inv_base[static_cast<size_t>(v)])
        continue;
      bool consistent = true;
      for (int s = 0; s < step && consistent; ++s) {
        int wp = order[static_cast<size_t>(s)];
        if (table_at(primed, vp, wp) !=
            table_at(base, v, map[static_cast<size_t>(wp)]))
          consistent = false;
      }
      if (!consistent) continue;
      map[static_cast<size_t>(vp)] = v;
      used[static_cast<size_t>(v)] = 1;
      if (place(step + 1)) return true;
      map[static_cast<size_t>(vp)] = -1;
      used[static_cast<size_t>(v)] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

std::optional<GraphIso> find_graph_isomorphism(const GkmGraph& gp,
                                               const GkmGraph& g) {
  // Graphs over different tori are never isomorphic.
  if (gp.rank() != g.rank()) return std::nullopt;
  auto map = find_table_isomorphism(pq_table(gp), pq_table(g));
  if (!map) return std::nullopt;
  return GraphIso{std::move(*map)};
}

bool verify_table_isomorphism(const PqTable& primed, const PqTable& base,
                              const std::vector<int>& map) {
  if (primed.num_vertices != base.num_vertices) return false;
  if (static_cast<int>(map.size()) != primed.num_vertices) return false;
  std::vector<char> used(map.size(), 0);
  for (int v : map) {
    if (v < 0 || v >= base.num_vertices || used[static_cast<size_t>(v)]) return false;
    used[static_cast<size_t>(v)] = 1;
  }
  for (int p = 0; p < primed.num_vertices; ++p)
    for (int q = p + 1; q < primed.num_vertices; ++q)
      if (table_at(primed, p, q) !=
          table_at(base, map[static_cast<size_t>(p)], map[static_cast<size_t>(q)]))
        return false;
  return true;
}

CohClass pullback(const GraphIso& iso, const GkmGraph& gp, const GkmGraph& g,
                  const CohClass& f) {
  if (static_cast<int>(iso.vertex_map.size()) != gp.num_vertices())
    throw std::invalid_argument("pullback: map size mismatch");
  std::vector<Poly> values;
  values.reserve(iso.vertex_map.size());
  for (int v : iso.vertex_map)
    values.push_back(f.values.at(static_cast<size_t>(v)));
  CohClass out = make_class(gp, std::move(values));
  out.degree = f.degree;
  if (!is_class(gp, out))
    throw std::logic_error("pullback: image is not a class");
  return out;
}

namespace {

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

using Membership = std::function<bool(const std::vector<Poly>&, int)>;

MaxRResult max_r_search(int rank, int num_points, int p, int q,
                        const std::vector<LinearForm>& factors_p,
                        const Poly& tau_p_value, const Poly& tau_q_value,
                        const Membership& member) {
  const int n = static_cast<int>(factors_p.size());
  bool have_best = false;
  int best_count = -1;
  Poly best_body(rank);
  std::vector<LinearForm> best_factors;

  std::set<Poly, PolyLess> tested;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<LinearForm> chosen;
    Poly product = Poly::constant(rank, 1);
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      chosen.push_back(factors_p[static_cast<size_t>(i)].normalized().second);
      product = product * chosen.back().to_poly();
    }
    Poly body = normalize_sign(product).body;
    if (!tested.insert(body).second) continue;

    Poly quot_q = tau_q_value;
    bool ok = true;
    for (const LinearForm& f : chosen) {
      if (!divides_linear(f, quot_q)) {
        ok = false;
        break;
      }
      quot_q = div_exact_linear(f, quot_q);
    }
    if (!ok) continue;

    Poly quot_p = tau_p_value;
    for (const LinearForm& f : chosen) {
      if (!divides_linear(f, quot_p))
        throw std::logic_error("max_r: factor list does not divide tau_p");
      quot_p = div_exact_linear(f, quot_p);
    }

    std::vector<Poly> values(static_cast<size_t>(num_points), Poly(rank));
    values[static_cast<size_t>(p)] = quot_p * quot_p;
    values[static_cast<size_t>(q)] = quot_q * quot_q;
    int degree = 2 * (*tau_p_value.homogeneous_degree() -
                      static_cast<int>(chosen.size()));
    if (!member(values, degree)) continue;

    int count = static_cast<int>(chosen.size());
    if (!have_best || count > best_count ||
        (count == best_count && poly_less(body, best_body))) {
      have_best = true;
      best_count = count;
      best_body = body;
      std::sort(chosen.begin(), chosen.end());
      best_factors = std::move(chosen);
    }
  }
  if (!have_best) throw std::logic_error("max_r: no valid candidate (R = 1 must be valid)");
  return {std::move(best_body), std::move(best_factors)};
}

}  // namespace

MaxRResult max_r(const GkmGraph& g, int p, int q) {
  if (p == q) throw std::invalid_argument("max_r: p == q");
  std::vector<LinearForm> factors;
  for (int e : g.darts_from(p)) factors.push_back(g.dart(e).alpha);
  Poly tau_p = thom_class(g, p).values[static_cast<size_t>(p)];
  Poly tau_q = thom_class(g, q).values[static_cast<size_t>(q)];
  Membership member = [&g](const std::vector<Poly>& values, int) {
    return is_class(g, values);
  };
  return max_r_search(g.rank(), g.num_vertices(), p, q, factors, tau_p, tau_q,
                      member);
}

AlgebraData make_algebra_data(const GkmGraph& g,
                              const std::vector<int>& anon_to_vertex) {
  if (static_cast<int>(anon_to_vertex.size()) != g.num_vertices())
    throw std::invalid_argument("make_algebra_data: permutation size mismatch");
  AlgebraData data;
  data.rank = g.rank();
  data.valence = g.valence();
  data.num_points = g.num_vertices();
  for (int d = 0; d <= 2 * g.valence(); ++d) {
    GradedBasis b = graded_basis(g, d);
    for (CohClass& f : b.basis) {
      std::vector<Poly> permuted;
      permuted.reserve(f.values.size());
      for (int v : anon_to_vertex)
        permuted.push_back(f.values.at(static_cast<size_t>(v)));
      f.values = std::move(permuted);
    }
    data.bases.push_back(std::move(b));
  }
  return data;
}

AlgebraData make_algebra_data(const GkmGraph& g) {
  std::vector<int> identity(static_cast<size_t>(g.num_vertices()));
  for (size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  return make_algebra_data(g, identity);
}

bool lattice_member(const AlgebraData& data, const std::vector<Poly>& values,
                    int degree) {
  if (degree < 0 || degree >= static_cast<int>(data.bases.size()))
    throw std::invalid_argument("lattice_member: degree out of range");
  if (static_cast<int>(values.size()) != data.num_points)
    throw std::invalid_argument("lattice_member: value count mismatch");
  const std::vector<Mono> monos = monomials_of_degree(data.rank, degree);
  const GradedBasis& basis = data.bases[static_cast<size_t>(degree)];
  const size_t rows = monos.size() * static_cast<size_t>(data.num_points);

  std::vector<Int> b;
  b.reserve(rows);
  for (const Poly& v : values)
    for (const Mono& m : monos) b.push_back(v.coeff(m));

  IntMatrix a(rows, std::vector<Int>(basis.basis.size(), 0));
  for (size_t c = 0; c < basis.basis.size(); ++c) {
    size_t row = 0;
    for (const Poly& v : basis.basis[c].values)
      for (const Mono& m : monos) a[row++][c] = v.coeff(m);
  }
  return solve_integer(a, b).has_value();
}

std::vector<CohClass> recover_vertices(const AlgebraData& data) {
  if (data.valence < 1 ||
      static_cast<int>(data.bases.size()) <= data.valence)
    throw AlgebraDataError("recover_vertices: missing graded bases");
  const GradedBasis& top = data.bases[static_cast<size_t>(data.valence)];
  const int k = static_cast<int>(top.rank());
  if (k == 0) throw AlgebraDataError("recover_vertices: degree-n component is trivial");
  const std::vector<Mono> monos = monomials_of_degree(data.rank, data.valence);

  std::vector<CohClass> reps;
  for (int i = 0; i < data.num_points; ++i) {
    // Integer combinations of the degree-n basis vanishing away from i.
    IntMatrix a;
    for (int j = 0; j < data.num_points; ++j) {
      if (j == i) continue;
      for (const Mono& m : monos) {
        std::vector<Int> row(static_cast<size_t>(k), 0);
        for (int c = 0; c < k; ++c)
          row[static_cast<size_t>(c)] =
              top.basis[static_cast<size_t>(c)].values[static_cast<size_t>(j)].coeff(m);
        a.push_back(std::move(row));
      }
    }
    std::vector<std::vector<Int>> kernel = integer_kernel(a, k);
    if (kernel.size() != 1)
      throw AlgebraDataError(
          "recover_vertices: singly-supported degree-n classes do not form a "
          "rank-1 lattice");

    std::vector<Poly> values(static_cast<size_t>(data.num_points), Poly(data.rank));
    for (int c = 0; c < k; ++c) {
      const Int& coef = kernel[0][static_cast<size_t>(c)];
      if (coef == 0) continue;
      for (int j = 0; j < data.num_points; ++j)
        values[static_cast<size_t>(j)] +=
            top.basis[static_cast<size_t>(c)].values[static_cast<size_t>(j)].times(coef);
    }
    if (values[static_cast<size_t>(i)].is_zero())
      throw AlgebraDataError("recover_vertices: recovered class vanishes at its point");
    for (int j = 0; j < data.num_points; ++j)
      if (j != i && !values[static_cast<size_t>(j)].is_zero())
        throw AlgebraDataError("recover_vertices: recovered class is not singly supported");
    // Fix the sign so that the value at the supporting point is normalized.
    if (normalize_sign(values[static_cast<size_t>(i)]).sign < 0)
      for (Poly& v : values) v = -v;
    reps.push_back({std::move(values), data.valence});
  }
  return reps;
}

PqTable reconstructed_pq_table(const AlgebraData& data) {
  std::vector<CohClass> reps = recover_vertices(data);

  std::vector<std::vector<LinearForm>> factor_lists;
  for (int i = 0; i < data.num_points; ++i) {
    const Poly& value = reps[static_cast<size_t>(i)].values[static_cast<size_t>(i)];
    auto split = split_linear_factors(value);
    if (!split || abs_int(split->scalar) != 1 ||
        static_cast<int>(split->factors.size()) != data.valence)
      throw AlgebraDataError(
          "reconstructed_pq_table: recovered value is not a unit product of "
          "primitive linear forms");
    factor_lists.push_back(std::move(split->factors));
  }

  Membership member = [&data](const std::vector<Poly>& values, int degree) {
    return lattice_member(data, values, degree);
  };

  PqTable t;
  t.num_vertices = data.num_points;
  for (int i = 0; i < data.num_points; ++i) {
    for (int j = i + 1; j < data.num_points; ++j) {
      MaxRResult r = max_r_search(
          data.rank, data.num_points, i, j, factor_lists[static_cast<size_t>(i)],
          reps[static_cast<size_t>(i)].values[static_cast<size_t>(i)],
          reps[static_cast<size_t>(j)].values[static_cast<size_t>(j)], member);
      t.pairs.emplace(std::make_pair(i, j), std::move(r.factors));
    }
  }
  return t;
}

std::optional<std::vector<int>> algebras_isomorphic(const AlgebraData& a,
                                                    const AlgebraData& b) {
  if (a.rank != b.rank || a.valence != b.valence || a.num_points != b.num_points)
    return std::nullopt;
  return find_table_isomorphism(reconstructed_pq_table(a),
                                reconstructed_pq_table(b));
}

}  // namespace gkm
