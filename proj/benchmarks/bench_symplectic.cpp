// Copyright 2026 The qsc authors
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

#include <benchmark/benchmark.h>

#include "qsc/rng.hpp"
#include "qsc/symplectic.hpp"

using namespace qsc;

namespace {

SymplecticVector random_vec(uint32_t p, uint32_t m, uint32_t n, CounterRng &rng) {
    SymplecticVector v = SymplecticVector::zero(p, m, n);
    for (auto &x : v.a) {
        x = static_cast<uint32_t>(rng.below(p));
    }
    for (auto &x : v.b) {
        x = static_cast<uint32_t>(rng.below(p));
    }
    return v;
}

}  // namespace

static void BM_AltInner(benchmark::State &state) {
    uint32_t n = static_cast<uint32_t>(state.range(0));
    CounterRng rng(1, 0);
    SymplecticVector u = random_vec(3, 2, n, rng);
    SymplecticVector v = random_vec(3, 2, n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(alt_inner(u, v));
    }
}
BENCHMARK(BM_AltInner)->Arg(8)->Arg(64)->Arg(512);

static void BM_SymWeight(benchmark::State &state) {
    uint32_t n = static_cast<uint32_t>(state.range(0));
    CounterRng rng(2, 0);
    SymplecticVector u = random_vec(2, 2, n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sym_weight(u));
    }
}
BENCHMARK(BM_SymWeight)->Arg(64)->Arg(512);

static void BM_BigPhi(benchmark::State &state) {
    FieldPtr f16 = Field::create(2, 4);
    SymplecticStructure st(f16);
    CounterRng rng(3, 0);
    std::vector<FieldElement> word;
    for (int i = 0; i < 32; i++) {
        word.push_back(f16->from_index(rng.below(16)));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(st.big_phi(word));
    }
}
BENCHMARK(BM_BigPhi);

static void BM_StructureInit(benchmark::State &state) {
    FieldPtr f = Field::create(2, static_cast<uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(SymplecticStructure(f));
    }
}
BENCHMARK(BM_StructureInit)->Arg(4)->Arg(6)->Arg(8);

