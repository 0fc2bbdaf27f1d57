// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "ecg/cograph.hpp"
#include "ecg/dh.hpp"
#include "ecg/edge_clique.hpp"
#include "ecg/random_family.hpp"

namespace {

void edge_clique(benchmark::State& state, ecg::Execution exec) {
  const auto g = ecg::random_family(ecg::Family::arbitrary, static_cast<int>(state.range(0)), 7, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ecg::edge_clique_graph(g, exec));
  state.counters["edges"] = static_cast<double>(g.size());
}

void edge_clique_reference(benchmark::State& state) {
  const auto g = ecg::random_family(ecg::Family::arbitrary, static_cast<int>(state.range(0)), 7, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ecg::edge_clique_graph_reference(g));
}

void d_prime_cograph(benchmark::State& state, ecg::Execution exec) {
  const auto g = ecg::random_family(ecg::Family::cograph, static_cast<int>(state.range(0)), 11);
  const auto t = ecg::require_cotree(g);
  for (auto _ : state) benchmark::DoNotOptimize(ecg::d_prime_all(g, t, exec));
}

void d_prime_dh(benchmark::State& state, ecg::Execution exec) {
  const auto g = ecg::random_family(ecg::Family::distance_hereditary, static_cast<int>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(ecg::d_prime_all_dh(g, exec));
}

}  // namespace

BENCHMARK_CAPTURE(edge_clique, serial, ecg::Execution::serial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(edge_clique, parallel, ecg::Execution::parallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(edge_clique_reference)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(d_prime_cograph, serial, ecg::Execution::serial)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(d_prime_cograph, parallel, ecg::Execution::parallel)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(d_prime_dh, serial, ecg::Execution::serial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(d_prime_dh, parallel, ecg::Execution::parallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
