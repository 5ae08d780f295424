#include <benchmark/benchmark.h>

#include "zdg/eigen.hpp"
#include "zdg/exact.hpp"
#include "zdg/graph.hpp"
#include "zdg/quotient.hpp"
#include "zdg/spectra.hpp"

namespace {

// (m, n) pairs indexed by the benchmark argument.
constexpr std::pair<int, int> kGraphs[] = {{2, 6}, {3, 5}, {4, 4}, {3, 6}, {4, 5}};

void BM_BuildGraph(benchmark::State& state) {
  const auto [m, n] = kGraphs[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(zdg::build_graph(m, n));
  state.SetLabel("m=" + std::to_string(m) + " n=" + std::to_string(n));
}
BENCHMARK(BM_BuildGraph)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_SymmetricEigen(benchmark::State& state) {
  const auto [m, n] = kGraphs[state.range(0)];
  const auto g = zdg::build_graph(m, n);
  const auto a = zdg::adjacency_matrix(g).map<double>([](std::int64_t x) { return double(x); });
  int sweeps = 0;
  for (auto _ : state) {
    const auto eig = zdg::symmetric_eigen(a);
    sweeps = eig.sweeps;
    benchmark::DoNotOptimize(eig.values.data());
  }
  state.counters["vertices"] = double(g.vertex_count());
  state.counters["sweeps"] = sweeps;
}
BENCHMARK(BM_SymmetricEigen)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_KrylovRankSparse(benchmark::State& state) {
  const auto [m, n] = kGraphs[state.range(0)];
  const auto g = zdg::build_graph(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(zdg::krylov_rank(g));
}
BENCHMARK(BM_KrylovRankSparse)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_WalkIterative(benchmark::State& state) {
  const auto p = zdg::build_p(7, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zdg::walk_matrix_iterative(p));
}
BENCHMARK(BM_WalkIterative)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_WalkClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zdg::walk_matrix_closed_p(7, state.range(0)));
}
BENCHMARK(BM_WalkClosedForm)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_WalkRank(benchmark::State& state) {
  const auto w = zdg::walk_matrix_closed_p(7, state.range(0)).entries;
  for (auto _ : state) benchmark::DoNotOptimize(zdg::exact_rank(w));
}
BENCHMARK(BM_WalkRank)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_QExactCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zdg::q_eigen_exact_check(5, state.range(0)));
}
BENCHMARK(BM_QExactCheck)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
