// Acceptance suite: every criterion prints one PASS/FAIL line and the
// process exits with the number of failures.

#include "gkm/cohomology.hpp"
#include "gkm/divide.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/rigidity.hpp"
#include "gkm/transport.hpp"

#include "support/testsupport.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gkm;
using gkmtest::fixture_path;
using gkmtest::load_fixture;
using gkmtest::run_cli;
using gkmtest::Rng;

namespace {

struct Failure {
  std::ostringstream out;
  bool any = false;
  template <typename T>
  Failure& operator<<(const T& v) {
    out << (any ? "; " : "") << v;
    any = true;
    return *this;
  }
};

#define EXPECT(cond, message)              \
  do {                                     \
    if (!(cond)) fail << (message);        \
  } while (0)

const std::vector<std::string>& valid_fixtures() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v = gkmtest::gkm_fixture_names();
    v.push_back("cp2-relabel");
    v.push_back("doubled-mixed-signs");
    return v;
  }();
  return names;
}

// ---- criterion 1: axiom suite ----
void criterion_axioms(Failure& fail) {
  for (const std::string& name : gkmtest::gkm_fixture_names()) {
    GkmGraph g = load_fixture(name);
    EXPECT(validate(g).ok(), name + " fails validation");
    EXPECT(find_transport(g).has_value(), name + " has no transport");
  }
  GkmGraph mixed = load_fixture("doubled-mixed-signs");
  EXPECT(validate(mixed).ok(), "doubled-mixed-signs should validate");
  EXPECT(!find_transport(mixed).has_value(),
         "doubled-mixed-signs unexpectedly admits a transport");

  ValidationReport r = validate(load_fixture("corrupted"));
  EXPECT(r.issues.size() == 2, "corrupted: expected exactly 2 issues");
  bool primitivity = false, independence = false;
  for (const ValidationIssue& i : r.issues) {
    if (i.axiom == Axiom::Primitivity && i.darts == std::vector<int>{2, 3})
      primitivity = true;
    if (i.axiom == Axiom::Independence && i.vertices == std::vector<int>{0} &&
        i.darts == std::vector<int>{0, 2})
      independence = true;
  }
  EXPECT(primitivity, "corrupted: missing the injected primitivity defect");
  EXPECT(independence, "corrupted: missing the injected independence defect");
}

// ---- criterion 2: key lemma audit + mutation control ----
void criterion_key_lemma(Failure& fail) {
  for (const std::string& name : gkmtest::gkm_fixture_names()) {
    GkmGraph g = load_fixture(name);
    for (int p = 0; p < g.num_vertices(); ++p)
      for (int q = 0; q < g.num_vertices(); ++q) {
        if (p == q) continue;
        for (int e : g.darts_between(p, q))
          EXPECT(key_lemma_check(g, p, q, e),
                 name + ": key lemma fails on a dart");
      }
  }
  // Flipping one reverse label sign in hirz1 must kill the transport, and
  // the audit must then refuse the graph.
  nlohmann::json mutated = gkmtest::load_fixture_json("hirz1");
  mutated["edges"][0]["alpha_rev"] = {1, 0};
  GkmGraph g = load_graph(mutated);
  EXPECT(validate(g).ok(), "mutated hirz1 should still validate");
  EXPECT(!is_gkm(g), "mutated hirz1 should not be GKM");
  std::string path = std::string(CLI_TMP_DIR) + "/hirz1-mutated.json";
  std::ofstream(path) << mutated.dump(2);
  EXPECT(run_cli({"audit", path}).exit_code == 2,
         "audit must refuse the mutated hirz1 with an input error");
  std::remove(path.c_str());
}

// ---- criterion 3: corollary audit ----
void criterion_corollary(Failure& fail) {
  for (const std::string& name : gkmtest::gkm_fixture_names()) {
    GkmGraph g = load_fixture(name);
    for (int p = 0; p < g.num_vertices(); ++p)
      for (int q = p + 1; q < g.num_vertices(); ++q)
        if (g.adjacent(p, q))
          EXPECT(corollary_check(g, p, q), name + ": corollary fails");
  }
}

// ---- criterion 4: graded bases against the dense oracle ----
void criterion_graded_bases(Failure& fail) {
  for (const std::string& name : valid_fixtures()) {
    GkmGraph g = load_fixture(name);
    for (int d = 0; d <= 3; ++d) {  // cohomological degree 2d <= 6
      std::string why;
      if (!gkmtest::oracle_check_graded_basis(g, d, &why))
        fail << (name + ": " + why);
    }
  }
  auto ranks = [](const GkmGraph& g, int max_d) {
    std::vector<size_t> r;
    for (int d = 0; d <= max_d; ++d) r.push_back(graded_basis(g, d).rank());
    return r;
  };
  EXPECT(ranks(load_fixture("segment"), 3) == std::vector<size_t>({1, 2, 2, 2}),
         "segment ranks != (1,2,2,2)");
  EXPECT(ranks(load_fixture("cp2"), 1) == std::vector<size_t>({1, 3}),
         "cp2 ranks != (1,3)");
  EXPECT(graded_basis(load_fixture("two-segments"), 0).rank() == 2,
         "disconnected degree-0 rank != number of components");
}

// ---- criterion 5: Thom classes ----
void criterion_thom(Failure& fail) {
  Rng rng(5005);
  for (const std::string& name : gkmtest::gkm_fixture_names()) {
    GkmGraph g = load_fixture(name);
    std::vector<CohClass> taus;
    for (int p = 0; p < g.num_vertices(); ++p) {
      taus.push_back(thom_class(g, p));
      EXPECT(is_class(g, taus.back()), name + ": Thom class not in the algebra");
      EXPECT(taus.back().degree == g.valence(), name + ": Thom class degree != n");
      EXPECT(taus.back().support() == std::vector<int>{p},
             name + ": Thom class support != {p}");
    }
    for (size_t i = 0; i < taus.size(); ++i)
      for (size_t j = i + 1; j < taus.size(); ++j)
        EXPECT(class_mul(taus[i], taus[j]).is_zero(),
               name + ": Thom product does not vanish");

    // 100 random singly-supported degree-n classes per fixture, each an
    // exact integer multiple of the Thom class at its vertex.
    GradedBasis top = graded_basis(g, g.valence());
    const std::vector<Mono> monos = monomials_of_degree(g.rank(), g.valence());
    for (int trial = 0; trial < 100; ++trial) {
      int p = gkmtest::rand_int(rng, 0, g.num_vertices() - 1);
      std::vector<std::vector<Int>> rows;
      for (int v = 0; v < g.num_vertices(); ++v) {
        if (v == p) continue;
        for (const Mono& m : monos) {
          std::vector<Int> row;
          for (const CohClass& f : top.basis)
            row.push_back(f.values[static_cast<size_t>(v)].coeff(m));
          rows.push_back(std::move(row));
        }
      }
      auto kernel = integer_kernel(rows, static_cast<int>(top.rank()));
      if (kernel.size() != 1) {
        fail << (name + ": singly-supported lattice is not rank 1");
        break;
      }
      Int scale;
      do {
        scale = gkmtest::rand_coeff(rng, 20);
      } while (scale == 0);
      Poly value(g.rank());
      for (size_t c = 0; c < kernel[0].size(); ++c)
        value += top.basis[c].values[static_cast<size_t>(p)].times(kernel[0][c] * scale);
      Poly quotient = value;
      bool exact = true;
      for (int e : g.darts_from(p)) {
        const LinearForm& a = g.dart(e).alpha;
        if (!divides_linear(a, quotient)) {
          exact = false;
          break;
        }
        quotient = div_exact_linear(a, quotient);
      }
      EXPECT(exact && quotient.total_degree() == 0,
             name + ": singly-supported class is not a Thom multiple");
    }
  }
}

// ---- criterion 6: witness identity ----
void criterion_witness(Failure& fail) {
  for (const std::string& name : gkmtest::gkm_fixture_names()) {
    GkmGraph g = load_fixture(name);
    for (int p = 0; p < g.num_vertices(); ++p)
      for (int q = 0; q < g.num_vertices(); ++q) {
        if (p == q) continue;
        try {
          pq_witness(g, p, q);  // checks the identity exactly, throws on failure
        } catch (const std::exception& e) {
          fail << (name + ": " + e.what());
        }
      }
  }
}

// ---- criterion 7: the characterization of P_pq ----
void criterion_characterization(Failure& fail) {
  for (const std::string& name : gkmtest::gkm_fixture_names()) {
    GkmGraph g = load_fixture(name);
    for (int p = 0; p < g.num_vertices(); ++p) {
      for (int q = 0; q < g.num_vertices(); ++q) {
        if (p == q) continue;
        Poly expected = normalize_sign(g.p_poly(p, q)).body;
        MaxRResult r = max_r(g, p, q);
        EXPECT(r.body == expected, name + ": max R != +-P_pq");

        // Exhaustive confirmation that no higher-degree candidate is valid.
        std::vector<int> labels = g.darts_from(p);
        int n = static_cast<int>(labels.size());
        int target = expected.is_zero() ? 0 : expected.total_degree();
        Poly tau_q = thom_class(g, q).values[static_cast<size_t>(q)];
        Poly tau_p = thom_class(g, p).values[static_cast<size_t>(p)];
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          int bits = __builtin_popcount(mask);
          if (bits <= target) continue;
          Poly quot_q = tau_q, quot_p = tau_p;
          bool valid = true;
          for (int i = 0; i < n && valid; ++i) {
            if (!(mask & (1u << i))) continue;
            const LinearForm& a = g.dart(labels[static_cast<size_t>(i)]).alpha;
            if (!divides_linear(a, quot_q)) {
              valid = false;
              break;
            }
            quot_q = div_exact_linear(a, quot_q);
            quot_p = div_exact_linear(a, quot_p);
          }
          if (valid) {
            std::vector<Poly> values(static_cast<size_t>(g.num_vertices()),
                                     Poly(g.rank()));
            values[static_cast<size_t>(p)] = quot_p * quot_p;
            values[static_cast<size_t>(q)] = quot_q * quot_q;
            valid = is_class(g, values);
          }
          EXPECT(!valid, name + ": a higher-degree R satisfies the identity");
        }
      }
    }
  }
}

// ---- criterion 8: main-theorem round trip ----
void criterion_round_trip(Failure& fail) {
  Rng rng(8008);
  const auto& names = gkmtest::gkm_fixture_names();
  std::vector<GkmGraph> graphs;
  std::vector<AlgebraData> data;
  for (const std::string& name : names) {
    graphs.push_back(load_fixture(name));
    data.push_back(make_algebra_data(graphs.back()));
  }
  int pairs = 0;
  for (size_t a = 0; a < names.size(); ++a)
    for (size_t b = 0; b < names.size(); ++b) {
      ++pairs;
      bool graph_iso = find_graph_isomorphism(graphs[a], graphs[b]).has_value();
      bool algebra_iso = algebras_isomorphic(data[a], data[b]).has_value();
      EXPECT(graph_iso == algebra_iso,
             names[a] + " vs " + names[b] + ": iso and rigidity disagree");
    }
  EXPECT(pairs >= 64, "fewer than 64 ordered fixture pairs");

  // Positive controls: relabeled, sign-flipped copies with anonymized data.
  for (size_t i = 0; i < names.size(); ++i) {
    nlohmann::json perturbed =
        gkmtest::relabel_and_flip(gkmtest::load_fixture_json(names[i]), rng);
    GkmGraph h = load_graph(perturbed);
    auto iso = find_graph_isomorphism(h, graphs[i]);
    if (!iso.has_value()) {
      fail << (names[i] + ": positive control not isomorphic");
      continue;
    }
    EXPECT(verify_table_isomorphism(pq_table(h), pq_table(graphs[i]), iso->vertex_map),
           names[i] + ": iso witness is wrong");
    std::vector<int> perm =
        gkmtest::random_permutation(rng, h.num_vertices());
    auto witness = algebras_isomorphic(make_algebra_data(h, perm), data[i]);
    if (!witness.has_value()) {
      fail << (names[i] + ": rigidity misses the positive control");
      continue;
    }
    EXPECT(verify_table_isomorphism(
               reconstructed_pq_table(make_algebra_data(h, perm)),
               reconstructed_pq_table(data[i]), *witness),
           names[i] + ": rigidity witness is wrong");
  }

  // Negative controls.
  EXPECT(!find_graph_isomorphism(load_fixture("hirz0"), load_fixture("hirz2")).has_value(),
         "hirz0 vs hirz2 detected isomorphic");
  EXPECT(!algebras_isomorphic(make_algebra_data(load_fixture("hirz0")),
                              make_algebra_data(load_fixture("hirz2"))).has_value(),
         "rigidity: hirz0 vs hirz2 detected isomorphic");
  EXPECT(!find_graph_isomorphism(load_fixture("cp2"), load_fixture("cp3")).has_value(),
         "cp2 vs cp3 detected isomorphic");
  EXPECT(!algebras_isomorphic(make_algebra_data(load_fixture("cp2")),
                              make_algebra_data(load_fixture("cp3"))).has_value(),
         "rigidity: cp2 vs cp3 detected isomorphic");

  // The command line agrees with the library on a sample of pairs.
  const std::pair<const char*, const char*> cli_pairs[] = {
      {"cp2", "cp2-relabel"}, {"hirz0", "hirz2"},        {"cp2", "cp3"},
      {"segment", "segment"}, {"doubled", "hirz1"},      {"two-segments", "two-segments"},
  };
  for (const auto& [a, b] : cli_pairs) {
    int iso_code = run_cli({"iso", fixture_path(a), fixture_path(b)}).exit_code;
    int rig_code = run_cli({"rigidity", fixture_path(a), fixture_path(b)}).exit_code;
    EXPECT(iso_code == rig_code,
           std::string(a) + " vs " + b + ": cmd_iso and cmd_rigidity disagree");
  }
}

// ---- criterion 9: determinism ----
void criterion_determinism(Failure& fail) {
  const std::vector<std::vector<std::string>> commands = {
      {"validate", fixture_path("corrupted")},
      {"transport", fixture_path("cp3")},
      {"cohomology", fixture_path("cp2"), "--max-cohdeg", "6"},
      {"thom", fixture_path("hirz2")},
      {"audit", fixture_path("doubled")},
      {"iso", fixture_path("cp2"), fixture_path("cp2-relabel")},
      {"rigidity", fixture_path("hirz3"), fixture_path("hirz3")},
  };
  for (const auto& cmd : commands) {
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    EXPECT(a.out == b.out && a.exit_code == b.exit_code,
           "command '" + cmd[0] + "' is not byte-identical across runs");
  }
}

struct Criterion {
  int number;
  std::string name;
  double time_limit;
  std::function<void(Failure&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "axiom suite", 1.0, criterion_axioms},
      {2, "key lemma audit", 1.0, criterion_key_lemma},
      {3, "corollary audit", 0.0, criterion_corollary},
      {4, "graded-basis oracle equivalence", 30.0, criterion_graded_bases},
      {5, "Thom class suite", 0.0, criterion_thom},
      {6, "witness identity", 0.0, criterion_witness},
      {7, "max-R characterization", 0.0, criterion_characterization},
      {8, "main-theorem round trip", 60.0, criterion_round_trip},
      {9, "determinism", 0.0, criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Failure fail;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(fail);
    } catch (const std::exception& e) {
      fail << (std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.time_limit > 0 && seconds >= c.time_limit)
      fail << ("time limit exceeded: " + std::to_string(seconds) + " s >= " +
               std::to_string(c.time_limit) + " s");
    char line[64];
    std::snprintf(line, sizeof(line), " (%.2f s)", seconds);
    if (fail.any) {
      ++failures;
      std::cout << "[FAIL] criterion " << c.number << ": " << c.name << line
                << " -- " << fail.out.str() << "\n";
    } else {
      std::cout << "[PASS] criterion " << c.number << ": " << c.name << line
                << "\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed")
            << "\n";
  return failures;
}
