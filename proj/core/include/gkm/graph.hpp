#pragma once

#include "gkm/linear_form.hpp"
#include "gkm/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkm {

// A directed edge. Every undirected edge of the graph contributes two darts
// e and reverse(e); darts are the primitive objects here, undirected edges
// exist only in the file format.
struct Dart {
  int id;
  int from;
  int to;
  int reverse;
  LinearForm alpha;
};

enum class Axiom {
  Valence,
  Involution,
  NoLoop,
  Sign,
  Independence,
  Primitivity,
};

const char* axiom_name(Axiom a);

struct ValidationIssue {
  Axiom axiom;
  std::vector<int> vertices;
  std::vector<int> darts;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Immutable after construction; all accessors are pure.
class GkmGraph {
 public:
  // Structural well-formedness only (index ranges, rank agreement, unique
  // names). The axioms of an axial function are checked by validate().
  GkmGraph(int rank, int valence, std::vector<std::string> vertex_names,
           std::vector<Dart> darts);

  int rank() const { return rank_; }
  int valence() const { return valence_; }
  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_darts() const { return static_cast<int>(darts_.size()); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(int v) const;
  std::optional<int> vertex_index(const std::string& name) const;

  const Dart& dart(int e) const;
  const std::vector<Dart>& darts() const { return darts_; }

  // E_p: outgoing dart ids in ascending order.
  const std::vector<int>& darts_from(int p) const;
  // E_pq: darts from p to q; requires p != q.
  std::vector<int> darts_between(int p, int q) const;
  bool adjacent(int p, int q) const;

  // P_pq: product of alpha over E_pq; the constant 1 iff p, q non-adjacent.
  Poly p_poly(int p, int q) const;

  // c(e): number of other darts parallel to e whose reverse label is the
  // exact negation of their own.
  int c_count(int e) const;

  // Partition of E_pq by the parity of c(e); requires p, q adjacent.
  std::pair<std::vector<int>, std::vector<int>> eo_partition(int p, int q) const;

  // (P, Q) = products of alpha over E_p \ E_pq and E_q \ E_qp.
  std::pair<Poly, Poly> pq_local(int p, int q) const;

 private:
  int rank_;
  int valence_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<Dart> darts_;
  std::vector<std::vector<int>> out_;

  void check_vertex(int v) const;
};

// Checks every axiom of an axial function and the valence/involution/loop
// structure. Failures are report entries, not exceptions; an empty report
// means the graph carries an axial function.
ValidationReport validate(const GkmGraph& g);

}  // namespace gkm
