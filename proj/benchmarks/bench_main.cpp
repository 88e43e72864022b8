/*
 * Copyright 2026 The sapzf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sapzf/canonical.hpp"
#include "sapzf/enumerate.hpp"
#include "sapzf/exact_linalg.hpp"
#include "sapzf/families.hpp"
#include "sapzf/sap_forcing.hpp"
#include "sapzf/survey.hpp"
#include "sapzf/xi.hpp"
#include "sapzf/zero_forcing.hpp"

#include <benchmark/benchmark.h>

using namespace sapzf;

namespace {

void BM_CanonicalForm(benchmark::State& state)
{
    // the cube and the Petersen graph; larger orders exceed the canonical form cap
    const int n = static_cast<int>(state.range(0));
    const Graph g = families::generalized_petersen(n, n == 4 ? 1 : 2);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(5);

// the enumeration is memoized, so only the first iteration pays for it
void BM_SurveyConnected(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto& graphs = connected_graphs(n);
    for (auto _ : state) benchmark::DoNotOptimize(survey_graphs(n, graphs));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_SurveyConnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SapClosure(benchmark::State& state)
{
    const Graph g = families::dodecahedron();
    for (auto _ : state) benchmark::DoNotOptimize(sap_closure(NonEdgeColoring(g), Rule::Z));
}
BENCHMARK(BM_SapClosure);

void BM_Zsap(benchmark::State& state)
{
    const Graph g = families::cube(); // 16 non-edges, within the subset search cap
    for (auto _ : state) benchmark::DoNotOptimize(zsap(g, Rule::Z));
}
BENCHMARK(BM_Zsap)->Unit(benchmark::kMillisecond);

void BM_HasSap(benchmark::State& state)
{
    const Graph g = families::complete_multipartite({3, 4});
    const auto a = sample_matrix(g, PatternFamily::S, 7);
    for (auto _ : state) benchmark::DoNotOptimize(has_sap(g, a));
}
BENCHMARK(BM_HasSap);

void BM_MinZeroForcingSet(benchmark::State& state)
{
    const Graph g = families::petersen();
    const Rule rule = state.range(0) == 0 ? Rule::Z : Rule::FloorZ;
    for (auto _ : state) benchmark::DoNotOptimize(min_zero_forcing_set(g, rule));
}
BENCHMARK(BM_MinZeroForcingSet)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CertifyXi(benchmark::State& state)
{
    const T3Family family = T3Family::load_default();
    const auto& graphs = connected_graphs(7);
    for (auto _ : state)
        for (const auto& g : graphs) benchmark::DoNotOptimize(certify_xi(g, family));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_CertifyXi)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
