// Copyright 2026 The hopfsmith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "hopfsmith/doubles.hpp"
#include "hopfsmith/filtration.hpp"
#include "hopfsmith/integrals.hpp"
#include "hopfsmith/linsolve.hpp"
#include "hopfsmith/presets.hpp"
#include "hopfsmith/smoothness.hpp"

using namespace hopfsmith;

namespace {

FieldSpec field_arg(std::int64_t c) { return FieldSpec::with_characteristic(static_cast<std::uint32_t>(c)); }

// Sparse random system with a planted solution, about four nonzeros per row.
LinearSystem planted_system(FieldSpec f, std::size_t vars, std::size_t rows, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-4, 4);
    Vec x(vars, f.zero());
    for (auto& v : x) v = f.from_int(coef(rng));
    LinearSystem sys(f, vars);
    for (std::size_t r = 0; r < rows; ++r) {
        Equation eq(f);
        Scalar rhs = f.zero();
        for (int k = 0; k < 4; ++k) {
            std::size_t j = rng() % vars;
            Scalar c = f.from_int(coef(rng));
            eq.add(j, c);
            rhs = rhs + c * x[j];
        }
        eq.add_rhs(rhs);
        sys.add(eq);
    }
    return sys;
}

void bm_solve_affine(benchmark::State& state) {
    FieldSpec f = field_arg(state.range(1));
    auto n = static_cast<std::size_t>(state.range(0));
    LinearSystem sys = planted_system(f, n, n, 42);
    for (auto _ : state) {
        auto sol = solve_affine(sys);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(bm_solve_affine)
    ->ArgsProduct({{64, 128, 256}, {0}})
    ->ArgsProduct({{64, 256, 1024}, {7}})
    ->ArgNames({"vars", "char"})
    ->Unit(benchmark::kMillisecond);

void bm_fs_section_cyclic(benchmark::State& state) {
    HopfData h = preset_group_algebra(cyclic_group(static_cast<std::size_t>(state.range(0))), field_arg(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(find_fs_section(h));
}
BENCHMARK(bm_fs_section_cyclic)
    ->ArgsProduct({{4, 8, 12}, {0, 2, 3}})
    ->ArgNames({"n", "char"})
    ->Unit(benchmark::kMillisecond);

void bm_double_separable(benchmark::State& state, const char* preset) {
    HopfData h = preset_by_name(preset, FieldSpec::rationals());
    for (auto _ : state) benchmark::DoNotOptimize(double_separable_over_h(h));
}
BENCHMARK_CAPTURE(bm_double_separable, group_C3, "group:C3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_double_separable, sweedler, "sweedler")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_double_separable, group_S3, "group:S3")->Unit(benchmark::kMillisecond);

void bm_separability_idempotent(benchmark::State& state) {
    HopfData h = preset_by_name("group:Q8", field_arg(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(separability_idempotent(h));
}
BENCHMARK(bm_separability_idempotent)->Arg(0)->Arg(3)->ArgName("char")->Unit(benchmark::kMillisecond);

void bm_radical(benchmark::State& state) {
    HopfData h = preset_group_algebra(cyclic_group(static_cast<std::size_t>(state.range(0))), FieldSpec::prime(2));
    for (auto _ : state) benchmark::DoNotOptimize(radical(h.alg));
}
BENCHMARK(bm_radical)->Arg(4)->Arg(8)->Arg(12)->ArgName("n")->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
