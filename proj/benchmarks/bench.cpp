#include <benchmark/benchmark.h>

#include "gkm/cohomology.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/rigidity.hpp"
#include "gkm/transport.hpp"

#include <random>

namespace {

gkm::GkmGraph fixture(const char* name) {
  return gkm::load_graph_file(std::string(FIXTURE_DIR) + "/" + name + ".json");
}

gkm::Poly random_product(std::mt19937_64& rng, int rank, int factors) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  gkm::Poly p = gkm::Poly::constant(rank, 1);
  for (int i = 0; i < factors; ++i) {
    std::vector<gkm::Int> c(static_cast<size_t>(rank));
    do {
      for (auto& v : c) v = coeff(rng);
    } while (gkm::gcd_all(c) != 1);
    p = p * gkm::LinearForm(c).to_poly();
  }
  return p;
}

void BM_PolyMulLinearProducts(benchmark::State& state) {
  std::mt19937_64 rng(42);
  int factors = static_cast<int>(state.range(0));
  gkm::Poly a = random_product(rng, 3, factors);
  gkm::Poly b = random_product(rng, 3, factors);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMulLinearProducts)->Arg(2)->Arg(4)->Arg(6);

void BM_FindTransport(benchmark::State& state) {
  gkm::GkmGraph g = fixture("cp3");
  for (auto _ : state) benchmark::DoNotOptimize(gkm::find_transport(g));
}
BENCHMARK(BM_FindTransport);

void BM_GradedBasis(benchmark::State& state) {
  gkm::GkmGraph g = fixture("cp3");
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gkm::graded_basis(g, degree));
}
BENCHMARK(BM_GradedBasis)->Arg(1)->Arg(3)->Arg(6);

void BM_GraphIso(benchmark::State& state) {
  gkm::GkmGraph a = fixture("hirz1");
  gkm::GkmGraph b = fixture("hirz3");
  for (auto _ : state) benchmark::DoNotOptimize(gkm::find_graph_isomorphism(a, b));
}
BENCHMARK(BM_GraphIso);

void BM_RigidityPipeline(benchmark::State& state) {
  gkm::AlgebraData da = gkm::make_algebra_data(fixture("cp2"));
  gkm::AlgebraData db = gkm::make_algebra_data(fixture("cp2-relabel"));
  for (auto _ : state) benchmark::DoNotOptimize(gkm::algebras_isomorphic(da, db));
}
BENCHMARK(BM_RigidityPipeline);

}  // namespace

BENCHMARK_MAIN();
