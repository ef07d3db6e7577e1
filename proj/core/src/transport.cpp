#include "gkm/transport.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

namespace {

// Augmenting-path maximum matching on a small bipartite graph.
struct BipartiteMatcher {
  std::vector<std::vector<int>> adj;  // left -> right candidates
  std::vector<int> match_left;
  std::vector<int> match_right;
  std::vector<char> visited;

  explicit BipartiteMatcher(int left, int right)
      : adj(static_cast<size_t>(left)),
        match_left(static_cast<size_t>(left), -1),
        match_right(static_cast<size_t>(right), -1),
        visited(static_cast<size_t>(right), 0) {}

  bool augment(int u) {
    for (int v : adj[static_cast<size_t>(u)]) {
      if (visited[static_cast<size_t>(v)]) continue;
      visited[static_cast<size_t>(v)] = 1;
      if (match_right[static_cast<size_t>(v)] == -1 ||
          augment(match_right[static_cast<size_t>(v)])) {
        match_left[static_cast<size_t>(u)] = v;
        match_right[static_cast<size_t>(v)] = u;
        return true;
      }
    }
    return false;
  }

  int solve() {
    int size = 0;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
      std::fill(visited.begin(), visited.end(), 0);
      if (augment(u)) ++size;
    }
    return size;
  }
};

bool has_perfect_matching(const std::vector<std::vector<int>>& adj, int right) {
  BipartiteMatcher m(static_cast<int>(adj.size()), right);
  m.adj = adj;
  return m.solve() == static_cast<int>(adj.size());
}

// Lexicographically least perfect matching: assign the domain in order, each
// time to the smallest candidate that keeps the rest completable.
std::optional<std::vector<int>> lex_least_perfect_matching(
    const std::vector<std::vector<int>>& adj, int right) {
  int left = static_cast<int>(adj.size());
  if (!has_perfect_matching(adj, right)) return std::nullopt;
  std::vector<int> assignment(static_cast<size_t>(left), -1);
  std::vector<char> used(static_cast<size_t>(right), 0);
  for (int u = 0; u < left; ++u) {
    bool placed = false;
    for (int v : adj[static_cast<size_t>(u)]) {
      if (used[static_cast<size_t>(v)]) continue;
      // Feasibility of the remainder with u -> v fixed.
      std::vector<std::vector<int>> rest;
      rest.reserve(static_cast<size_t>(left - u - 1));
      for (int w = u + 1; w < left; ++w) {
        std::vector<int> cands;
        for (int c : adj[static_cast<size_t>(w)])
          if (c != v && !used[static_cast<size_t>(c)]) cands.push_back(c);
        rest.push_back(std::move(cands));
      }
      if (has_perfect_matching(rest, right)) {
        assignment[static_cast<size_t>(u)] = v;
        used[static_cast<size_t>(v)] = 1;
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;  // unreachable: checked up front
  }
  return assignment;
}

}  // namespace

std::optional<Int> compat_coefficient(const GkmGraph& g, int e, int ep, int epp) {
  const Dart& d = g.dart(e);
  if (g.dart(ep).from != d.from)
    throw std::invalid_argument("compat_coefficient: e' not outgoing at i(e)");
  if (g.dart(epp).from != d.to)
    throw std::invalid_argument("compat_coefficient: e'' not outgoing at t(e)");
  const std::vector<Int>& a = d.alpha.coeffs();
  std::vector<Int> diff(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    diff[i] = g.dart(epp).alpha.coeff(static_cast<int>(i)) -
              g.dart(ep).alpha.coeff(static_cast<int>(i));

  Int dcoef(0);
  bool have = false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (diff[i] % a[i] != 0) return std::nullopt;
    dcoef = diff[i] / a[i];
    have = true;
    break;
  }
  if (!have) {
    // alpha(e) == 0 never happens on validated graphs.
    for (const Int& c : diff)
      if (c != 0) return std::nullopt;
    return Int(0);
  }
  for (size_t i = 0; i < a.size(); ++i)
    if (diff[i] != dcoef * a[i]) return std::nullopt;
  return dcoef;
}

std::optional<Transport> find_transport(const GkmGraph& g) {
  if (!validate(g).ok())
    throw std::invalid_argument("find_transport: graph fails validation");

  Transport t;
  t.maps.assign(static_cast<size_t>(g.num_darts()), {});
  std::vector<char> done(static_cast<size_t>(g.num_darts()), 0);

  for (int e = 0; e < g.num_darts(); ++e) {
    if (done[static_cast<size_t>(e)]) continue;
    const Dart& d = g.dart(e);
    int rev = d.reverse;

    std::vector<int> domain;
    for (int ep : g.darts_from(d.from))
      if (ep != e) domain.push_back(ep);
    std::vector<int> codomain;
    for (int epp : g.darts_from(d.to))
      if (epp != rev) codomain.push_back(epp);

    std::vector<std::vector<int>> adj(domain.size());
    for (size_t i = 0; i < domain.size(); ++i)
      for (size_t c = 0; c < codomain.size(); ++c)
        if (compat_coefficient(g, e, domain[i], codomain[c]))
          adj[i].push_back(static_cast<int>(c));

    auto matching = lex_least_perfect_matching(adj, static_cast<int>(codomain.size()));
    if (!matching) return std::nullopt;

    std::vector<std::pair<int, int>> fwd, bwd;
    fwd.emplace_back(e, rev);
    bwd.emplace_back(rev, e);
    for (size_t i = 0; i < domain.size(); ++i) {
      int image = codomain[static_cast<size_t>((*matching)[i])];
      fwd.emplace_back(domain[i], image);
      bwd.emplace_back(image, domain[i]);
    }
    std::sort(fwd.begin(), fwd.end());
    std::sort(bwd.begin(), bwd.end());
    t.maps[static_cast<size_t>(e)] = std::move(fwd);
    t.maps[static_cast<size_t>(rev)] = std::move(bwd);
    done[static_cast<size_t>(e)] = 1;
    done[static_cast<size_t>(rev)] = 1;
  }
  return t;
}

bool check_transport(const GkmGraph& g, const Transport& t) {
  if (static_cast<int>(t.maps.size()) != g.num_darts()) return false;
  for (int e = 0; e < g.num_darts(); ++e) {
    const Dart& d = g.dart(e);
    const auto& m = t.maps[static_cast<size_t>(e)];

    std::vector<int> domain = g.darts_from(d.from);
    if (m.size() != domain.size()) return false;
    std::vector<int> sources, images;
    for (const auto& [src, img] : m) {
      sources.push_back(src);
      images.push_back(img);
    }
    if (sources != domain) return false;  // both are sorted ascending
    std::vector<int> sorted_images = images;
    std::sort(sorted_images.begin(), sorted_images.end());
    if (sorted_images != g.darts_from(d.to)) return false;  // bijection onto E_{t(e)}

    for (const auto& [src, img] : m) {
      if (src == e && img != d.reverse) return false;
      if (!compat_coefficient(g, e, src, img)) return false;
      // P over the reverse dart must be the inverse map.
      const auto& rm = t.maps[static_cast<size_t>(d.reverse)];
      auto it = std::lower_bound(rm.begin(), rm.end(), std::make_pair(img, 0));
      if (it == rm.end() || it->first != img || it->second != src) return false;
    }
  }
  return true;
}

std::map<int, Int> transport_coefficients(const GkmGraph& g, const Transport& t,
                                          int e) {
  const auto& m = t.maps.at(static_cast<size_t>(e));
  std::map<int, Int> out;
  for (const auto& [src, img] : m) {
    auto d = compat_coefficient(g, e, src, img);
    if (!d)
      throw std::invalid_argument("transport_coefficients: map is not compatible");
    out.emplace(src, *d);
  }
  return out;
}

bool is_gkm(const GkmGraph& g) {
  if (!validate(g).ok()) return false;
  return find_transport(g).has_value();
}

nlohmann::json transport_to_json(const Transport& t) {
  nlohmann::json darts = nlohmann::json::array();
  for (size_t e = 0; e < t.maps.size(); ++e) {
    nlohmann::json entry;
    entry["dart"] = e;
    nlohmann::json maps = nlohmann::json::array();
    for (const auto& [src, img] : t.maps[e])
      maps.push_back(nlohmann::json::array({src, img}));
    entry["maps"] = std::move(maps);
    darts.push_back(std::move(entry));
  }
  return nlohmann::json{{"transport", std::move(darts)}};
}

}  // namespace gkm
