#include <benchmark/benchmark.h>

#include <vector>

#include "dicke/bogoliubov.hpp"
#include "dicke/ed/basis.hpp"
#include "dicke/ed/hamiltonian.hpp"
#include "dicke/ed/solver.hpp"

using namespace dicke;

static void BM_NormalModes(benchmark::State& state) {
  DickeParams p{1.0, 1.3, 0.1, 1, 0.0};
  for (auto _ : state) {
    p.g = p.g < 0.5 ? p.g + 1e-6 : 0.1;
    benchmark::DoNotOptimize(normal_modes(p).eps_minus);
  }
}
BENCHMARK(BM_NormalModes);

static void BM_BuildDicke(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = ed::build_basis(n, 50);
  for (auto _ : state) {
    auto h = ed::build_dicke_hamiltonian({1.0, 1.0, 0.5, n, 0.0}, basis);
    benchmark::DoNotOptimize(h.matrix.val.data());
  }
  state.counters["dim"] = static_cast<double>(basis.dim);
}
BENCHMARK(BM_BuildDicke)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Matvec(benchmark::State& state) {
  const auto basis = ed::build_basis(7, 50);
  const auto h = ed::build_dicke_hamiltonian({1.0, 1.0, 0.5, 7, 0.0}, basis);
  std::vector<double> x(basis.dim, 1.0), y(basis.dim);
  for (auto _ : state) {
    h.matrix.multiply(x.data(), y.data());
    benchmark::DoNotOptimize(y.data());
  }
  state.counters["nnz"] = static_cast<double>(h.matrix.nnz());
}
BENCHMARK(BM_Matvec)->Unit(benchmark::kMicrosecond);

static void BM_GroundStateLanczos(benchmark::State& state) {
  const auto basis = ed::build_basis(7, 50);
  const auto h = ed::build_dicke_hamiltonian({1.0, 1.0, 0.5, 7, 0.0}, basis);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ed::ground_state(h).energy);
  }
}
BENCHMARK(BM_GroundStateLanczos)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
