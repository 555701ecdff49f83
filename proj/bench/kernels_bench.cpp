#include <benchmark/benchmark.h>

#include <vector>

#include "scalecalc/core_paths.hpp"
#include "scalecalc/kernels.hpp"

using namespace scalecalc;

namespace {

const std::vector<double>& takagi_values() {
  static const std::vector<double> v = [] {
    const GridSpec grid = GridSpec::covering(0.0, 1.0, std::size_t{1} << 20);
    const SampledPath f = gen_takagi(0.5, takagi_terms_for(0.5, grid.dt), grid);
    return std::vector<double>(f.values().begin(), f.values().end());
  }();
  return v;
}

constexpr double kDt = 1.0 / (1 << 20);

template <bool Parallel>
void BM_ScaleDifference(benchmark::State& state) {
  const auto& v = takagi_values();
  const std::size_t k = 16;
  std::vector<Complex> out(v.size() - 2 * k);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::omp::scale_difference(std::span<const double>(v), k, k * kDt, out);
    } else {
      kernels::serial::scale_difference(std::span<const double>(v), k, k * kDt, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <bool Parallel>
void BM_SegmentLength(benchmark::State& state) {
  const auto& v = takagi_values();
  for (auto _ : state) {
    const double len = Parallel ? kernels::omp::segment_length_sum(v, 1, kDt) : kernels::serial::segment_length_sum(v, 1, kDt);
    benchmark::DoNotOptimize(len);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

template <bool Parallel>
void BM_MinimalResolution(benchmark::State& state) {
  const auto& v = takagi_values();
  const std::size_t kmax = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> out(v.size() - 2 * kmax);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::omp::minimal_resolution_steps(v, kDt, kmax, 40.0, out);
    } else {
      kernels::serial::minimal_resolution_steps(v, kDt, kmax, 40.0, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_HolderAllPairs(benchmark::State& state) {
  const auto& all = takagi_values();
  const std::vector<double> v(all.begin(), all.begin() + state.range(0));
  for (auto _ : state) {
    const double r = Parallel ? kernels::omp::holder_ratio_all_pairs(v, kDt, 0.5)
                              : kernels::serial::holder_ratio_all_pairs(v, kDt, 0.5);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_SchrodingerResidual(benchmark::State& state) {
  const std::size_t nx = 1025, nt = 257;
  std::vector<Complex> psi(nx * nt);
  for (std::size_t k = 0; k < nt; ++k) {
    for (std::size_t j = 0; j < nx; ++j) psi[k * nx + j] = std::polar(1.0 + 0.001 * j, 0.01 * j - 0.02 * k);
  }
  const kernels::WaveGridView view{psi, nx, nt, 0.01, 0.001};
  const std::vector<kernels::SliceCoefficients> slices(nt, {Complex(0.0, 1.0), Complex(0.5, 0.0), Complex(0.0, 0.0)});
  const std::vector<double> pot(nx, 0.0);
  std::vector<Complex> out((nx - 2) * (nt - 2));
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::omp::schrodinger_residual(view, slices, pot, kernels::GradientForm::OverPsi, out);
    } else {
      kernels::serial::schrodinger_residual(view, slices, pot, kernels::GradientForm::OverPsi, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_ScaleDifference<false>)->Name("scale_difference/serial");
BENCHMARK(BM_ScaleDifference<true>)->Name("scale_difference/omp");
BENCHMARK(BM_SegmentLength<false>)->Name("segment_length/serial");
BENCHMARK(BM_SegmentLength<true>)->Name("segment_length/omp");
BENCHMARK(BM_MinimalResolution<false>)->Name("minimal_resolution/serial")->Arg(256);
BENCHMARK(BM_MinimalResolution<true>)->Name("minimal_resolution/omp")->Arg(256);
BENCHMARK(BM_HolderAllPairs<false>)->Name("holder_all_pairs/serial")->Arg(4096);
BENCHMARK(BM_HolderAllPairs<true>)->Name("holder_all_pairs/omp")->Arg(4096);
BENCHMARK(BM_SchrodingerResidual<false>)->Name("schrodinger_residual/serial");
BENCHMARK(BM_SchrodingerResidual<true>)->Name("schrodinger_residual/omp");

BENCHMARK_MAIN();
