// Copyright 2026 The pmod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "pmod/group.hpp"
#include "pmod/reps.hpp"
#include "pmod/spectral.hpp"
#include "pmod/witten.hpp"

namespace {

void BM_WordEnumeration(benchmark::State& state) {
  const auto g = pmod::punctured_torus_group();
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    pmod::for_each_word(g, len, [&](const pmod::GroupWord&, const pmod::MoebiusMap&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pmod::reduced_word_count(2, len)));
}
BENCHMARK(BM_WordEnumeration)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_PrimitiveClasses(benchmark::State& state) {
  const auto g = pmod::punctured_torus_group();
  for (auto _ : state) benchmark::DoNotOptimize(pmod::primitive_classes(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PrimitiveClasses)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_SelbergLogZeta(benchmark::State& state) {
  const auto g = pmod::punctured_torus_group();
  const pmod::ZetaQuery q{2.0, pmod::fricke_su2(0.3), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(pmod::selberg_log_zeta(g, q));
}
BENCHMARK(BM_SelbergLogZeta)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_EisensteinEvaluate(benchmark::State& state) {
  const auto g = pmod::punctured_torus_group();
  const pmod::AdjointRep ad(pmod::fricke_su2(0.3));
  const auto space = pmod::invariant_cusp_space(ad, g, 1);
  const pmod::EisensteinSeries e(g, ad, 1, space.traceless_basis[0], 2.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(e(std::complex<double>(0.3, 1.5)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * e.coset_count()));
}
BENCHMARK(BM_EisensteinEvaluate)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_WittenNumeric(benchmark::State& state) {
  const std::vector<double> alphas{0.1, 0.2, 0.3, 0.4};
  const pmod::WittenOptions opts{.terms = state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(pmod::witten_volume(0, alphas, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WittenNumeric)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_WittenExact(benchmark::State& state) {
  const std::vector<double> alphas(static_cast<std::size_t>(state.range(0)), 0.23);
  for (auto _ : state) benchmark::DoNotOptimize(pmod::witten_volume(1, alphas, {.exact_only = true}));
}
BENCHMARK(BM_WittenExact)->DenseRange(2, 10, 4);

}  // namespace

BENCHMARK_MAIN();
