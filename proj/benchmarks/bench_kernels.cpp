// Microbenchmarks for the performance-sensitive kernels: lattice enumeration,
// the pairwise autocorrelation sweep, Fourier-Bohr sums and the truncated
// dual-lattice sums behind the PSF checks.

#include <benchmark/benchmark.h>

#include <cmath>

#include "cutproject/verify.hpp"

using namespace cutproject;

namespace {

const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;

CutProjectScheme fibonacci_scheme() {
    Eigen::MatrixXd M(2, 2);
    M << 1.0, kTau, 1.0, 1.0 - kTau;
    Eigen::VectorXi c(2);
    c << 0, 0;
    return CutProjectScheme(1, 1, 1, M, c, "fibonacci");
}

Eigen::VectorXd vec1(double x) {
    Eigen::VectorXd v(1);
    v << x;
    return v;
}

void BM_EnumerateLattice(benchmark::State& state) {
    const auto scheme = fibonacci_scheme();
    const double n = static_cast<double>(state.range(0));
    const Box physical(vec1(-n), vec1(n));
    const Box internal(vec1(-1.0), vec1(1.0));
    for (auto _ : state) {
        auto pts = enumerate_lattice(scheme, physical, internal);
        benchmark::DoNotOptimize(pts.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(2 * n));
}
BENCHMARK(BM_EnumerateLattice)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_CutModelSet(benchmark::State& state) {
    const auto scheme = fibonacci_scheme();
    const auto h = WeightFunction::box({{-0.5, 0.5}}, 1, {0});
    const double n = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto ps = cut_model_set(scheme, h, VanHoveBox(n, vec1(0.0)));
        benchmark::DoNotOptimize(ps.size());
    }
}
BENCHMARK(BM_CutModelSet)->Arg(1000)->Arg(10000);

void BM_FiniteAutocorrelation(benchmark::State& state) {
    const auto scheme = fibonacci_scheme();
    const auto h = WeightFunction::box({{-0.5, 0.5}}, 1, {0});
    const auto ps =
        cut_model_set(scheme, h, VanHoveBox(static_cast<double>(state.range(0)), vec1(0.0)));
    for (auto _ : state) {
        auto g = finite_autocorrelation(ps, 10.0);
        benchmark::DoNotOptimize(g.entries.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}
BENCHMARK(BM_FiniteAutocorrelation)->Arg(500)->Arg(2000)->Arg(8000);

void BM_FourierBohr(benchmark::State& state) {
    const auto scheme = fibonacci_scheme();
    const auto h = WeightFunction::box({{-0.5, 0.5}}, 1, {0});
    const auto ps = cut_model_set(scheme, h, VanHoveBox(10000.0, vec1(0.0)));
    const Eigen::VectorXd chi = vec1(kTau / std::sqrt(5.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourier_bohr(ps, chi));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}
BENCHMARK(BM_FourierBohr);

void BM_WeightedPsfCheck(benchmark::State& state) {
    const auto scheme = fibonacci_scheme();
    const auto tent = WeightFunction::tent({0.5}, 1, {0});
    const auto g = GaussianTest::standard(1);
    PsfOptions opts;
    opts.internal_tail_target = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto rep = weighted_psf_check(scheme, tent, g, 1e-8, opts);
        benchmark::DoNotOptimize(rep.residual);
    }
}
BENCHMARK(BM_WeightedPsfCheck)->Arg(1000)->Arg(10000);

void BM_DiffractionPeaks(benchmark::State& state) {
    const auto scheme = fibonacci_scheme();
    const auto h = WeightFunction::box({{-0.5, 0.5}}, 1, {0});
    const Box dual_box(vec1(-5.0), vec1(5.0));
    for (auto _ : state) {
        auto peaks = diffraction_peaks(scheme, h, dual_box, 1e-6);
        benchmark::DoNotOptimize(peaks.data());
    }
}
BENCHMARK(BM_DiffractionPeaks);

} // namespace

BENCHMARK_MAIN();
