#include "focklab/experiments.hpp"
#include "focklab/operators.hpp"

#include <benchmark/benchmark.h>

using namespace focklab;
using Complex = std::complex<double>;

namespace {

const FockSpace& space(int degree) {
    static std::map<int, FockSpace> cache;
    auto it = cache.find(degree);
    if (it == cache.end())
        it = cache.emplace(degree, FockSpace(TruncationParams(1.0, degree))).first;
    return it->second;
}

void BM_grid_construction(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        QuadratureGrid g(TruncationParams(1.0, d));
        benchmark::DoNotOptimize(g.weighted_basis().data());
    }
}
BENCHMARK(BM_grid_construction)->Arg(20)->Arg(40)->Arg(60);

void BM_toeplitz_gaussian_closed_form(benchmark::State& state) {
    const FockSpace& fs = space(static_cast<int>(state.range(0)));
    const SymbolSpec q = make_q_beta(2.0);
    for (auto _ : state) {
        OperatorMatrix t = toeplitz_from_symbol(q, fs);
        benchmark::DoNotOptimize(t.entries.data());
    }
}
BENCHMARK(BM_toeplitz_gaussian_closed_form)->Arg(20)->Arg(40)->Arg(60);

void BM_toeplitz_quadrature(benchmark::State& state) {
    const FockSpace& fs = space(static_cast<int>(state.range(0)));
    const SymbolSpec q = make_q_beta(2.0);
    for (auto _ : state) {
        OperatorMatrix t = toeplitz_from_symbol_quadrature(q, fs);
        benchmark::DoNotOptimize(t.entries.data());
    }
}
BENCHMARK(BM_toeplitz_quadrature)->Arg(20)->Arg(40);

void BM_weighted_shift(benchmark::State& state) {
    const FockSpace& fs = space(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        OperatorMatrix c = weighted_shift(Complex(0.7, -0.3), fs);
        benchmark::DoNotOptimize(c.entries.data());
    }
}
BENCHMARK(BM_weighted_shift)->Arg(20)->Arg(40);

void BM_lattice_toeplitz(benchmark::State& state) {
    const FockSpace& fs = space(40);
    const MeasureSpec m = LatticeMeasure{0.5, default_lattice_cutoff(fs)};
    for (auto _ : state) {
        OperatorMatrix t = toeplitz_from_measure(m, fs);
        benchmark::DoNotOptimize(t.entries.data());
    }
}
BENCHMARK(BM_lattice_toeplitz);

void BM_op_norm_2(benchmark::State& state) {
    const FockSpace& fs = space(40);
    const OperatorMatrix c = weighted_shift(Complex(1, 0), fs);
    for (auto _ : state) benchmark::DoNotOptimize(op_norm_2(c));
}
BENCHMARK(BM_op_norm_2);

void BM_berezin_field(benchmark::State& state) {
    const FockSpace& fs = space(40);
    const OperatorMatrix c = weighted_shift(Complex(1, 0), fs);
    BerezinSampleSpec spec;
    for (auto _ : state) {
        BerezinField f = berezin(c, spec, fs);
        benchmark::DoNotOptimize(f.values.data());
    }
}
BENCHMARK(BM_berezin_field);

void BM_restricted_norm(benchmark::State& state) {
    const FockSpace& fs = space(40);
    const OperatorMatrix c = weighted_shift(Complex(1, 0), fs);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            restricted_norm(c, BallIndicator{Complex(0, 0), 2.0, true}, fs));
}
BENCHMARK(BM_restricted_norm);

} // namespace

BENCHMARK_MAIN();
