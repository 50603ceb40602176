#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qboltz/cbm_meanfield.hpp"
#include "qboltz/qbm_meanfield.hpp"
#include "qboltz/random.hpp"
#include "qboltz/tensor_ops.hpp"

namespace {

using namespace qboltz;

CbmParams make_cbm(int n, std::uint64_t seed) {
  GaussianStream gauss(seed);
  CbmParams p(n);
  for (int i = 0; i < n; ++i) p.set_h(i, gauss.next());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) p.set_w(i, j, 0.2 * gauss.next());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) p.set_v(i, j, k, 0.1 * gauss.next());
    }
  }
  return p;
}

QbmParams make_qbm(int n, std::uint64_t seed) {
  GaussianStream gauss(seed);
  QbmParams p(n);
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= 3; ++s) p.set_h(i, s, gauss.next());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) p.set_w(i, j, s, t, 0.2 * gauss.next());
      }
    }
  }
  return p;
}

void BM_LogPartitionClassical(benchmark::State& state) {
  const CbmParams p = make_cbm(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_partition_classical(p));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogPartitionClassical)->DenseRange(8, 16, 4)->Complexity();

void BM_ExactMomentsClassical(benchmark::State& state) {
  const CbmParams p = make_cbm(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_moments_classical(p));
  }
}
BENCHMARK(BM_ExactMomentsClassical)->DenseRange(6, 12, 3);

void BM_HermExpm(benchmark::State& state) {
  GaussianStream gauss(3);
  const int dim = static_cast<int>(state.range(0));
  Eigen::MatrixXcd a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = Complex{gauss.next(), gauss.next()};
  }
  a = (0.25 * (a + a.adjoint())).eval();
  for (auto _ : state) {
    benchmark::DoNotOptimize(herm_expm(a));
  }
}
BENCHMARK(BM_HermExpm)->RangeMultiplier(4)->Range(16, 256);

void BM_LogPartitionQuantum(benchmark::State& state) {
  const QbmParams p = make_qbm(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_partition_quantum(p));
  }
}
BENCHMARK(BM_LogPartitionQuantum)->DenseRange(2, 6, 2);

void BM_SolveMeanFieldClassical(benchmark::State& state) {
  const CbmParams p = make_cbm(static_cast<int>(state.range(0)), 5);
  const SolverConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_naive_mf_classical(p, cfg));
  }
}
BENCHMARK(BM_SolveMeanFieldClassical)->DenseRange(8, 16, 4);

void BM_SolveMeanFieldQuantum(benchmark::State& state) {
  const QbmParams p = make_qbm(static_cast<int>(state.range(0)), 6);
  const SolverConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_naive_mf_quantum(p, cfg));
  }
}
BENCHMARK(BM_SolveMeanFieldQuantum)->DenseRange(4, 10, 3);

}  // namespace

BENCHMARK_MAIN();
