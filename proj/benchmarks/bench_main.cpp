#include <benchmark/benchmark.h>

#include <random>

#include "srtor/gysin.hpp"
#include "srtor/intlinalg.hpp"
#include "srtor/koszul.hpp"

using namespace srtor;

namespace {

SimplicialComplex square() { return SimplicialComplex::build(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

SimplicialComplex pentagon() { return SimplicialComplex::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

IntMatrix random_square_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-20, 20);
  IntMatrix A(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) A(r, c) = entry(rng);
  return A;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix A = random_square_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_TorTableSquare(benchmark::State& state) {
  const auto K = square();
  const SubgroupData S(IntMatrix{{1, 0, -2, 0}, {0, 2, 0, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(tor_table(K, S, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TorTableSquare)->Arg(8)->Arg(12)->Arg(16);

void BM_TorTablePentagon(benchmark::State& state) {
  const auto K = pentagon();
  const SubgroupData S(IntMatrix{{1, 0, -2, 0, 1}, {0, 2, 0, -1, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(tor_table(K, S, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TorTablePentagon)->Arg(8)->Arg(12);

void BM_GysinExactness(benchmark::State& state) {
  const auto K = square();
  const SubgroupData S(IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}, {0, 1, 1, -1}});
  for (auto _ : state)
    benchmark::DoNotOptimize(build_and_verify_exactness(K, S, 2, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GysinExactness)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
