#include <benchmark/benchmark.h>

#include "qmacd/kernel.hpp"

using namespace qmacd;

namespace {

QtPoly dense_poly(int deg, int seed) {
    QtPoly p;
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; b <= deg; ++b)
            p.set_term(a, b, BigInt((a * 7 + b * 13 + seed) % 11 - 5));
    return p;
}

void BM_qtpoly_gcd(benchmark::State& state) {
    int deg = static_cast<int>(state.range(0));
    QtPoly g = dense_poly(2, 1);
    QtPoly a = dense_poly(deg, 2) * g;
    QtPoly b = dense_poly(deg, 3) * g;
    for (auto _ : state)
        benchmark::DoNotOptimize(QtPoly::gcd(a, b));
}
BENCHMARK(BM_qtpoly_gcd)->Arg(2)->Arg(4)->Arg(6);

void BM_nonsym_macdonald(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int w = static_cast<int>(state.range(1));
    auto etas = compositions_of_weight(n, w);
    for (auto _ : state) {
        MacdonaldTable table; // fresh cache each iteration
        for (const auto& eta : etas)
            benchmark::DoNotOptimize(table.nonsym_macdonald(eta));
    }
}
BENCHMARK(BM_nonsym_macdonald)->Args({2, 4})->Args({3, 3})->Args({3, 4});

void BM_uplus(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MacdonaldTable table;
    std::vector<int> eta(static_cast<size_t>(n), 0);
    eta[0] = 2;
    eta[static_cast<size_t>(n) - 1] = 1;
    XPolynomial E = table.nonsym_macdonald(Composition(eta));
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_Uplus(E));
}
BENCHMARK(BM_uplus)->Arg(2)->Arg(3)->Arg(4);

void BM_build_kernel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int N = static_cast<int>(state.range(1));
    for (auto _ : state) {
        MacdonaldTable table;
        benchmark::DoNotOptimize(build_KA(n, N, table));
    }
}
BENCHMARK(BM_build_kernel)->Args({2, 3})->Args({2, 4})->Args({3, 3});

} // namespace

BENCHMARK_MAIN();
