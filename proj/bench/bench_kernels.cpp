#include <benchmark/benchmark.h>

#include "cnz/oracle.hpp"
#include "cnz/parser.hpp"
#include "cnz/pit.hpp"
#include "cnz/transform.hpp"

namespace {

cnz::GridSpec cube(const cnz::RingSpec& ring, std::size_t n, std::int64_t side) {
  std::vector<cnz::Int> set;
  for (std::int64_t k = 0; k < side; ++k) set.emplace_back(k);
  return cnz::GridSpec::uniform(ring, n, set);
}

cnz::Polynomial workload(const cnz::RingSpec& ring) {
  return cnz::random_polynomial(3, {6, 6, 6}, 0.3, ring, 7);
}

void BM_CountSerial(benchmark::State& state) {
  auto ring = cnz::RingSpec::prime_field(101);
  auto f = workload(ring);
  auto grid = cube(ring, 3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cnz::count_nonzeros_serial(f, grid).nonzeros);
}

void BM_CountParallel(benchmark::State& state) {
  auto ring = cnz::RingSpec::prime_field(101);
  auto f = workload(ring);
  auto grid = cube(ring, 3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cnz::count_nonzeros(f, grid).nonzeros);
}

void BM_CoefficientSerial(benchmark::State& state) {
  auto ring = cnz::RingSpec::prime_field(101);
  auto f = workload(ring);
  auto grid = cube(ring, 3, 7);
  auto values = cnz::tabulate(f, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cnz::coefficient_via_grid_serial(values, grid, {6, 6, 6}));
  }
}

void BM_CoefficientParallel(benchmark::State& state) {
  auto ring = cnz::RingSpec::prime_field(101);
  auto f = workload(ring);
  auto grid = cube(ring, 3, 7);
  auto values = cnz::tabulate(f, grid);
  for (auto _ : state) benchmark::DoNotOptimize(cnz::coefficient_via_grid(values, grid, {6, 6, 6}));
}

void BM_DagZerosSerial(benchmark::State& state) {
  auto ring = cnz::RingSpec::prime_field(101);
  auto dag = cnz::parse_dag("((x+1)*(y+2) - z)^3 - (x*y*z)^2", {"x", "y", "z"}, ring);
  auto grid = cnz::sample_grid(dag, 20);
  for (auto _ : state) benchmark::DoNotOptimize(cnz::count_dag_zeros_serial(dag, grid).zeros);
}

void BM_DagZerosParallel(benchmark::State& state) {
  auto ring = cnz::RingSpec::prime_field(101);
  auto dag = cnz::parse_dag("((x+1)*(y+2) - z)^3 - (x*y*z)^2", {"x", "y", "z"}, ring);
  auto grid = cnz::sample_grid(dag, 20);
  for (auto _ : state) benchmark::DoNotOptimize(cnz::count_dag_zeros(dag, grid).zeros);
}

}  // namespace

BENCHMARK(BM_CountSerial)->Arg(10)->Arg(30);
BENCHMARK(BM_CountParallel)->Arg(10)->Arg(30);
BENCHMARK(BM_CoefficientSerial);
BENCHMARK(BM_CoefficientParallel);
BENCHMARK(BM_DagZerosSerial);
BENCHMARK(BM_DagZerosParallel);

BENCHMARK_MAIN();
