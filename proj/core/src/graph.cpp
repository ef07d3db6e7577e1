#include "gkm/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gkm {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Valence: return "valence";
    case Axiom::Involution: return "involution";
    case Axiom::NoLoop: return "no-loop";
    case Axiom::Sign: return "sign";
    case Axiom::Independence: return "GKM-independence";
    case Axiom::Primitivity: return "primitivity";
  }
  return "?";
}

GkmGraph::GkmGraph(int rank, int valence, std::vector<std::string> vertex_names,
                   std::vector<Dart> darts)
    : rank_(rank),
      valence_(valence),
      names_(std::move(vertex_names)),
      darts_(std::move(darts)) {
  if (rank_ < 1) throw std::invalid_argument("graph: rank must be positive");
  if (valence_ < 1) throw std::invalid_argument("graph: valence must be positive");
  if (names_.empty()) throw std::invalid_argument("graph: no vertices");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("graph: empty vertex name");
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("graph: duplicate vertex name '" + names_[i] + "'");
  }
  int nv = num_vertices();
  int nd = num_darts();
  out_.assign(static_cast<size_t>(nv), {});
  for (int e = 0; e < nd; ++e) {
    const Dart& d = darts_[static_cast<size_t>(e)];
    if (d.id != e) throw std::invalid_argument("graph: dart id out of order");
    if (d.from < 0 || d.from >= nv || d.to < 0 || d.to >= nv)
      throw std::invalid_argument("graph: dart endpoint out of range");
    if (d.reverse < 0 || d.reverse >= nd)
      throw std::invalid_argument("graph: reverse dart out of range");
    if (d.alpha.rank() != rank_)
      throw std::invalid_argument("graph: label rank mismatch");
    out_[static_cast<size_t>(d.from)].push_back(e);
  }
}

const std::string& GkmGraph::vertex_name(int v) const {
  check_vertex(v);
  return names_[static_cast<size_t>(v)];
}

std::optional<int> GkmGraph::vertex_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Dart& GkmGraph::dart(int e) const {
  if (e < 0 || e >= num_darts()) throw std::invalid_argument("graph: unknown dart");
  return darts_[static_cast<size_t>(e)];
}

void GkmGraph::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices())
    throw std::invalid_argument("graph: unknown vertex");
}

const std::vector<int>& GkmGraph::darts_from(int p) const {
  check_vertex(p);
  return out_[static_cast<size_t>(p)];
}

std::vector<int> GkmGraph::darts_between(int p, int q) const {
  check_vertex(p);
  check_vertex(q);
  if (p == q) throw std::invalid_argument("darts_between: p == q");
  std::vector<int> res;
  for (int e : darts_from(p))
    if (dart(e).to == q) res.push_back(e);
  return res;
}

bool GkmGraph::adjacent(int p, int q) const {
  return !darts_between(p, q).empty();
}

Poly GkmGraph::p_poly(int p, int q) const {
  Poly prod = Poly::constant(rank_, 1);
  for (int e : darts_between(p, q)) prod = prod * dart(e).alpha.to_poly();
  return prod;
}

int GkmGraph::c_count(int e) const {
  const Dart& d = dart(e);
  int count = 0;
  for (int ep : darts_between(d.from, d.to)) {
    if (ep == e) continue;
    const Dart& dp = dart(ep);
    if (dart(dp.reverse).alpha == dp.alpha.negated()) ++count;
  }
  return count;
}

std::pair<std::vector<int>, std::vector<int>> GkmGraph::eo_partition(int p, int q) const {
  std::vector<int> between = darts_between(p, q);
  if (between.empty())
    throw std::invalid_argument("eo_partition: vertices are not adjacent");
  std::vector<int> even, odd;
  for (int e : between) (c_count(e) % 2 == 0 ? even : odd).push_back(e);
  return {std::move(even), std::move(odd)};
}

std::pair<Poly, Poly> GkmGraph::pq_local(int p, int q) const {
  check_vertex(p);
  check_vertex(q);
  if (p == q) throw std::invalid_argument("pq_local: p == q");
  Poly prod_p = Poly::constant(rank_, 1);
  for (int e : darts_from(p))
    if (dart(e).to != q) prod_p = prod_p * dart(e).alpha.to_poly();
  Poly prod_q = Poly::constant(rank_, 1);
  for (int e : darts_from(q))
    if (dart(e).to != p) prod_q = prod_q * dart(e).alpha.to_poly();
  return {std::move(prod_p), std::move(prod_q)};
}

namespace {

std::string dart_label(const GkmGraph& g, int e) {
  const Dart& d = g.dart(e);
  std::ostringstream os;
  os << "dart " << e << " (" << g.vertex_name(d.from) << " -> "
     << g.vertex_name(d.to) << ")";
  return os.str();
}

}  // namespace

ValidationReport validate(const GkmGraph& g) {
  ValidationReport report;
  auto push = [&](Axiom a, std::vector<int> vertices, std::vector<int> darts,
                  std::string detail) {
    report.issues.push_back(
        {a, std::move(vertices), std::move(darts), std::move(detail)});
  };

  for (int v = 0; v < g.num_vertices(); ++v) {
    int deg = static_cast<int>(g.darts_from(v).size());
    if (deg != g.valence()) {
      std::ostringstream os;
      os << "vertex " << g.vertex_name(v) << " has " << deg
         << " outgoing darts, expected " << g.valence();
      push(Axiom::Valence, {v}, {}, os.str());
    }
  }

  for (int e = 0; e < g.num_darts(); ++e) {
    const Dart& d = g.dart(e);
    const Dart& rd = g.dart(d.reverse);
    if (d.reverse == e || rd.reverse != e || rd.from != d.to || rd.to != d.from)
      push(Axiom::Involution, {}, {e},
           dart_label(g, e) + " has an inconsistent reverse");
  }

  // Per-edge checks run once per dart pair; a broken involution is already
  // reported above, so missing a pair here is fine.
  for (int e = 0; e < g.num_darts(); ++e) {
    const Dart& d = g.dart(e);
    if (e > d.reverse) continue;
    const Dart& rd = g.dart(d.reverse);
    if (d.from == d.to)
      push(Axiom::NoLoop, {}, {e, d.reverse}, dart_label(g, e) + " is a loop");
    if (rd.alpha != d.alpha && rd.alpha != d.alpha.negated())
      push(Axiom::Sign, {}, {e, d.reverse},
           "label of the reverse of " + dart_label(g, e) +
               " is neither the label nor its negation");
    if (!d.alpha.is_primitive() || !rd.alpha.is_primitive())
      push(Axiom::Primitivity, {}, {e, d.reverse},
           "label of " + dart_label(g, e) + " is zero or imprimitive");
  }

  for (int v = 0; v < g.num_vertices(); ++v) {
    const std::vector<int>& out = g.darts_from(v);
    for (size_t i = 0; i < out.size(); ++i) {
      for (size_t j = i + 1; j < out.size(); ++j) {
        const LinearForm& a = g.dart(out[i]).alpha;
        const LinearForm& b = g.dart(out[j]).alpha;
        if (a.is_zero() || b.is_zero()) continue;  // reported as primitivity
        if (!lf_independent(a, b)) {
          std::ostringstream os;
          os << "labels of darts " << out[i] << " and " << out[j]
             << " at vertex " << g.vertex_name(v)
             << " are linearly dependent";
          push(Axiom::Independence, {v}, {out[i], out[j]}, os.str());
        }
      }
    }
  }

  return report;
}

}  // namespace gkm
