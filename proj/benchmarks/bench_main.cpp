// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/inner_product.hpp"
#include "qpoly/operator_apply.hpp"
#include "qpoly/polynomials.hpp"
#include "qpoly/verify.hpp"

#include <benchmark/benchmark.h>

using namespace qpoly;

namespace {

void BM_OperatorMatrix(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    OperatorSpec s;
    s.kind = OpKind::Dr;
    s.n = n;
    s.r = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(operator_matrix(s, size_cover(n, d)));
    }
}
BENCHMARK(BM_OperatorMatrix)->Args({1, 4})->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_KoornwinderTriangular(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(koornwinder_triangular(n, size_cover(n, d)));
    }
}
BENCHMARK(BM_KoornwinderTriangular)->Args({1, 3})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_Quadrature(benchmark::State& state)
{
    WeightFunctionSpec spec;
    spec.grid = static_cast<int>(state.range(0));
    const NumPoly one{{{0, 0}, 1.0L}};
    for (auto _ : state) {
        const Quadrature quad(2, spec);
        benchmark::DoNotOptimize(quad.inner(one, one));
    }
}
BENCHMARK(BM_Quadrature)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
