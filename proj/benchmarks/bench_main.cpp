/*
   Copyright 2026 The sigmacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "sigmacode/bounds.hpp"
#include "sigmacode/codes.hpp"
#include "sigmacode/curve_parse.hpp"
#include "sigmacode/rrspace.hpp"
#include "sigmacode/tables.hpp"

using namespace sigmacode;

namespace {

CurveModel elliptic5() { return parse_curve("y2=3*(x^4+2)", Field::of_order(5)); }

const SigmaCode& code(long long m) {
    static const SigmaCode c2 = build_code(elliptic5(), {2, 1, DPolicy::Disjoint});
    static const SigmaCode c4 = build_code(elliptic5(), {4, 1, DPolicy::Disjoint});
    return m == 2 ? c2 : c4;
}

void BM_RRBasis(benchmark::State& state) {
    const CurveModel m = elliptic5();
    const Divisor a = Divisor::of(infinite_places(m)[0], static_cast<int>(state.range(0))) +
                      Divisor::of(rational_places(m)[0]);
    for (auto _ : state) benchmark::DoNotOptimize(rr_basis(m, a));
}
BENCHMARK(BM_RRBasis)->Arg(1)->Arg(2)->Arg(4);

void BM_BuildCode(benchmark::State& state) {
    const CurveModel m = elliptic5();
    for (auto _ : state) benchmark::DoNotOptimize(build_code(m, {state.range(0), 1, DPolicy::Disjoint}));
}
BENCHMARK(BM_BuildCode)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MinDistance(benchmark::State& state) {
    const SigmaCode& c = code(state.range(0));
    const DistanceOptions opts{static_cast<unsigned>(state.range(1)), false};
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(c, opts));
    const double pairs = static_cast<double>(c.size()) * static_cast<double>(c.size() - 1) / 2;
    state.counters["pairs/s"] = benchmark::Counter(pairs, benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_MinDistance)->Args({2, 1})->Args({4, 1})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_Tables(benchmark::State& state) {
    for (auto _ : state)
        for (auto p : {tables::Preset::I, tables::Preset::II, tables::Preset::III})
            benchmark::DoNotOptimize(tables::render_md(tables::build(p)));
}
BENCHMARK(BM_Tables)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
