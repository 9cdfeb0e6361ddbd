#include <benchmark/benchmark.h>

#include "lqel/clifford.hpp"
#include "lqel/linalg.hpp"
#include "lqel/pipeline.hpp"
#include "lqel/rng.hpp"
#include "lqel/secant.hpp"
#include "lqel/varieties.hpp"

namespace {

using namespace lqel;

Matrix random_rational_matrix(std::size_t rows, std::size_t cols) {
  SeededRng rng(1234);
  Matrix m(rows, cols);
  for (auto& e : m.data) {
    Scalar num(rng.int_in(-20, 20));
    num /= Scalar(rng.int_in(1, 9));
    e = num;
  }
  return m;
}

void bm_rref(benchmark::State& state) {
  const Matrix m = random_rational_matrix(20, 30);
  for (auto _ : state) {
    Matrix work = m;
    benchmark::DoNotOptimize(rref_in_place(work));
  }
}
BENCHMARK(bm_rref);

void bm_severi_sff(benchmark::State& state) {
  const Chart c = severi16_chart();
  for (auto _ : state) {
    benchmark::DoNotOptimize(second_fundamental_form(c));
  }
}
BENCHMARK(bm_severi_sff);

void bm_severi_secant(benchmark::State& state) {
  const FundamentalForms f = second_fundamental_form(severi16_chart());
  SeededRng rng(1);
  const GenericTangent g = sample_generic_tangent(f, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(key_identity_check(f, g.v));
  }
}
BENCHMARK(bm_severi_secant);

void bm_severi_clifford_relations(benchmark::State& state) {
  const FundamentalForms f = second_fundamental_form(severi16_chart());
  SeededRng rng(1);
  const GenericTangent g = sample_generic_tangent(f, rng);
  const SecantReport rep = key_identity_check(f, g.v);
  const CliffordModuleData d = build_clifford_module(f, rep);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_clifford_relations(d));
  }
}
BENCHMARK(bm_severi_clifford_relations);

void bm_severi_full_run(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze("severi16", 1));
  }
}
BENCHMARK(bm_severi_full_run);

void bm_gamma9(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_construction(9));
  }
}
BENCHMARK(bm_gamma9);

}  // namespace

BENCHMARK_MAIN();
