// Serial reference vs OpenMP for each kernel on the same inputs. The second
// template argument selects the implementation; sizes match typical CLI runs.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bandlab/kernels.hpp"

namespace {

namespace k = bandlab::kernels;

std::vector<double> ramp(std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

template <bool Parallel>
void BM_exponential_sum(benchmark::State& state) {
  const auto n_nodes = static_cast<std::size_t>(state.range(0));
  std::vector<k::cplx> coeff(n_nodes);
  for (std::size_t j = 0; j < n_nodes; ++j) coeff[j] = std::exp(-1e-4 * static_cast<double>(j));
  const auto freq = ramp(1024, -2.0, 2.0);
  std::vector<k::cplx> out(freq.size());
  const k::UniformNodes nodes{-0.5 * 0.05 * static_cast<double>(n_nodes), 0.05};
  for (auto _ : state) {
    if constexpr (Parallel)
      k::parallel::exponential_sum(nodes, coeff, freq, -1, out);
    else
      k::serial::exponential_sum(nodes, coeff, freq, -1, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n_nodes * freq.size()));
}

template <bool Parallel>
void BM_cardinal_series(benchmark::State& state) {
  const auto n_terms = static_cast<std::size_t>(state.range(0));
  const long first = -static_cast<long>(n_terms / 2);
  std::vector<double> values(n_terms);
  for (std::size_t j = 0; j < n_terms; ++j) {
    const double x = std::numbers::pi * static_cast<double>(first + static_cast<long>(j));
    values[j] = 1.0 / (1.0 + 1e-3 * x * x);
  }
  const auto xs = ramp(2000, -50.0, 50.0);
  std::vector<double> out(xs.size());
  for (auto _ : state) {
    if constexpr (Parallel)
      k::parallel::cardinal_series(first, values, xs, out);
    else
      k::serial::cardinal_series(first, values, xs, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n_terms * xs.size()));
}

template <bool Parallel>
void BM_log_abs_sinc_product(benchmark::State& state) {
  const auto n_factors = static_cast<std::size_t>(state.range(0));
  std::vector<double> coeff(n_factors);
  for (std::size_t j = 0; j < n_factors; ++j)
    coeff[j] = 0.3 * std::pow(static_cast<double>(j + 1), -1.0 / 0.75);
  const auto xs = ramp(4096, -100.0, 100.0);
  std::vector<double> log_abs(xs.size());
  std::vector<int> sign(xs.size());
  for (auto _ : state) {
    if constexpr (Parallel)
      k::parallel::log_abs_sinc_product(coeff, xs, log_abs, sign);
    else
      k::serial::log_abs_sinc_product(coeff, xs, log_abs, sign);
    benchmark::DoNotOptimize(log_abs.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n_factors * xs.size()));
}

}  // namespace

BENCHMARK(BM_exponential_sum<false>)->Arg(4096)->Arg(65536)->UseRealTime();
BENCHMARK(BM_exponential_sum<true>)->Arg(4096)->Arg(65536)->UseRealTime();
BENCHMARK(BM_cardinal_series<false>)->Arg(1001)->Arg(20001)->UseRealTime();
BENCHMARK(BM_cardinal_series<true>)->Arg(1001)->Arg(20001)->UseRealTime();
BENCHMARK(BM_log_abs_sinc_product<false>)->Arg(128)->Arg(6728)->UseRealTime();
BENCHMARK(BM_log_abs_sinc_product<true>)->Arg(128)->Arg(6728)->UseRealTime();

BENCHMARK_MAIN();
